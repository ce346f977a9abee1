"""Acceptance suite: one test per shipped guarantee, at the stated tolerance.

Every expected value here is either computed by an independent oracle
inside the test (numerical integration, brute-force enumeration, dense
grid scans, sort-and-index) or frozen from the hand-derived annotation
table and golden documents under tests/fixtures and tests/goldens.
Run with -v for one pass/fail line per guarantee.
"""

from __future__ import annotations

import json
import math
import random
import time

import pytest
from scipy.integrate import quad

from quperman import cli
from quperman.benchmark import nearest_rank
from quperman.config import AnalysisConfig, WorkbenchConfig
from quperman.documents import analysis_document, health_document
from quperman.health import (
    Severity,
    SmellKind,
    aggregate_project,
    detect_smells,
    maintainability_index,
    score_file,
)
from quperman.metrics.analyze import analyze_project
from quperman.metrics.duplication import duplication_ratios
from quperman.model.benefit import BenefitCurve, benefit_slope, benefit_value, derive_breakpoints
from quperman.model.cost import CostModel, InvestmentBarrier, cost_to_target
from quperman.model.cost import BarrierCategory

from conftest import CORPUS, FIXTURES, GOLDENS, make_file_metrics, make_fn

INCLUDE_ALL = AnalysisConfig(include=("**/*",))


def test_benefit_curve_endpoints_midpoint_monotonicity_and_steep_ends():
    start = time.perf_counter()
    curve = BenefitCurve()

    assert benefit_value(curve, 1.0) == 0.0
    assert benefit_value(curve, 10.0) == 1.0
    assert abs(benefit_value(curve, 5.5) - 0.5) < 1e-9

    grid = [1.0 + 9.0 * i / (10**4 - 1) for i in range(10**4)]
    values = [benefit_value(curve, h) for h in grid]
    assert all(b > a for a, b in zip(values, values[1:]))

    mid_slope = benefit_slope(curve, 5.5)
    step = 1e-6
    for h in (1.05, 9.95):
        finite = (benefit_value(curve, h + step) - benefit_value(curve, h - step)) / (2 * step)
        assert finite > mid_slope

    assert time.perf_counter() - start < 1.0


def test_breakpoints_match_dense_grid_oracle_and_mirror_to_eleven():
    for k_slope in (1.5, 3.0):
        curve = BenefitCurve(k_slope=k_slope)
        bp = derive_breakpoints(curve)

        # oracle: scan outward from the midpoint on a 1e-4 grid for the
        # first level whose slope reaches the target
        target = k_slope * benefit_slope(curve, 5.5)
        h = 5.5
        while benefit_slope(curve, h) < target:
            h -= 1e-4
        assert abs(bp.cost_spiral_trigger - h) <= 1e-4
        h = 5.5
        while benefit_slope(curve, h) < target:
            h += 1e-4
        assert abs(bp.value_cascade_point - h) <= 1e-4

        assert abs(bp.cost_spiral_trigger + bp.value_cascade_point - 11.0) <= 1e-6


def test_cost_closed_form_additivity_and_barrier_crossings():
    start = time.perf_counter()
    rng = random.Random(20260816)

    # closed form vs numerical integration, 100 barrier-free instances
    for _ in range(100):
        h0 = rng.uniform(1.0, 9.0)
        gamma = rng.uniform(1.1, 4.0)
        c0 = rng.uniform(0.5, 50.0)
        a = rng.uniform(h0, 10.0)
        b = rng.uniform(a, 10.0)
        model = CostModel(current_level=h0, base_marginal_cost=c0, escalation=gamma)
        total, _ = cost_to_target(model, a, b)
        numeric, _ = quad(lambda x: c0 * gamma ** (x - h0), a, b)
        if numeric != 0.0:
            assert abs(total - numeric) / abs(numeric) < 1e-6
        else:
            assert abs(total) < 1e-12

    # additivity absent barriers
    model = CostModel(current_level=1.5, base_marginal_cost=8.0, escalation=2.2)
    for _ in range(100):
        a, b, c = sorted(rng.uniform(1.5, 10.0) for _ in range(3))
        whole, _ = cost_to_target(model, a, c)
        split = cost_to_target(model, a, b)[0] + cost_to_target(model, b, c)[0]
        assert abs(whole - split) < 1e-9

    # barrier crossings vs brute-force enumeration, 1000 random plans
    for _ in range(1000):
        current = rng.uniform(1.0, 9.0)
        positions = sorted(
            {round(rng.uniform(current + 0.05, 10.0), 4) for _ in range(rng.randint(0, 6))}
        )
        plan = tuple(
            InvestmentBarrier(
                category=list(BarrierCategory)[i % 7],
                position=p,
                fixed_cost=5.0 * (i + 1),
            )
            for i, p in enumerate(positions)
        )
        model = CostModel(current_level=current, barrier_plan=plan)
        a = rng.uniform(current, 10.0)
        b = rng.uniform(a, 10.0)
        _, crossed = cost_to_target(model, a, b)
        brute_force = [bar for bar in plan if a < bar.position <= b]
        assert len(crossed) == len(brute_force)
        assert list(crossed) == brute_force

    assert time.perf_counter() - start < 5.0


def test_percentiles_equal_sort_and_index_oracle():
    rng = random.Random(314159)
    for _ in range(1000):
        scores = sorted(round(rng.uniform(1, 10), 4) for _ in range(rng.randint(1, 50)))
        n = len(scores)
        for p in (10, 50, 90):
            oracle = scores[max(1, math.ceil(p * n / 100)) - 1]
            assert nearest_rank(scores, p) == oracle

    single = [rng.uniform(1, 10)]
    for p in (10, 50, 90):
        assert nearest_rank(single, p) == single[0]


def test_metrics_match_hand_annotations_and_duplication_oracle():
    # exact match against the hand-derived annotation table
    expected = json.loads((FIXTURES / "corpus_expected.json").read_text())["files"]
    result = analyze_project(str(CORPUS), INCLUDE_ALL)
    measured = {fm.unit.path: fm for fm in result.files}
    assert set(measured) == set(expected)

    for path, want in expected.items():
        fm = measured[path]
        assert fm.total_loc == want["totalLoc"], path
        assert len(fm.functions) == len(want["functions"]), path
        for fn, wfn in zip(fm.functions, want["functions"]):
            label = f"{path}::{wfn['name']}"
            assert fn.name == wfn["name"], label
            assert fn.loc == wfn["loc"], label
            assert fn.cyclomatic == wfn["cyclomatic"], label
            assert fn.max_nesting == wfn["maxNesting"], label
            assert fn.arity == wfn["arity"], label
            # Halstead: N and n to exact integers, V to 1e-9
            assert fn.halstead_length == wfn["halsteadLength"], label
            assert fn.halstead_vocabulary == wfn["halsteadVocabulary"], label
            n = wfn["halsteadVocabulary"]
            volume = wfn["halsteadLength"] * math.log2(n) if n > 0 else 0.0
            assert abs(fn.halstead_volume - volume) < 1e-9, label

    # duplication equals the brute-force window oracle on small corpora
    def oracle_ratios(streams, window):
        windows = {
            path: [tuple(stream[i : i + window]) for i in range(len(stream) - window + 1)]
            for path, stream in streams.items()
        }
        flat = [w for ws in windows.values() for w in ws]
        ratios = {}
        for path, ws in windows.items():
            if not ws:
                ratios[path] = 0.0
                continue
            duplicated = sum(1 for w in ws if flat.count(w) >= 2)
            ratios[path] = duplicated / len(ws)
        return ratios

    rng = random.Random(271828)
    alphabet = ["_", "if", "(", ")", "+", "=", "1", ":", "return"]
    for _ in range(30):
        streams = {
            f"f{i}.py": tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 50)))
            for i in range(rng.randint(1, 5))
        }
        for window in (8, 10):
            assert duplication_ratios(streams, window) == oracle_ratios(streams, window)


def test_scoring_clean_file_boundaries_range_and_monotonic_penalties():
    # clean fixture scores a full 10.0
    clean = make_file_metrics(
        functions=(make_fn(loc=30, cyclomatic=3, max_nesting=2, arity=2),),
        total_loc=40,
        comment_density=0.1,
    )
    assert score_file(clean.unit.path, detect_smells(clean)).score == 10.0

    # boundary fixtures: exactly at the limits is clean, just over trips
    # exactly the expected detector set
    at_limit = make_file_metrics(
        functions=(make_fn(loc=70, cyclomatic=10, max_nesting=4, arity=5),),
        total_loc=600,
        comment_density=0.5,
        line_count=700,
    )
    assert detect_smells(at_limit) == []

    over_limit = make_file_metrics(
        functions=(make_fn(loc=71, cyclomatic=11, max_nesting=5, arity=6),),
        total_loc=601,
        comment_density=0.5,
        line_count=700,
    )
    assert [f.kind for f in detect_smells(over_limit)] == [
        SmellKind.LONG_FUNCTION,
        SmellKind.COMPLEX_FUNCTION,
        SmellKind.DEEP_NESTING,
        SmellKind.MANY_ARGUMENTS,
        SmellKind.BRAIN_METHOD,
        SmellKind.LARGE_FILE,
    ]

    dup_and_quiet = make_file_metrics(
        total_loc=201, comment_density=0.019, duplication_ratio=0.151, line_count=210
    )
    found = detect_smells(dup_and_quiet)
    assert [f.kind for f in found] == [SmellKind.DUPLICATION, SmellKind.LOW_COMMENT]
    assert found[1].severity is Severity.MINOR

    # all scores stay inside [1, 10] and removing any single finding
    # never lowers the score
    rng = random.Random(161803)
    for _ in range(100):
        fm = make_file_metrics(
            functions=tuple(
                make_fn(
                    name=f"f{i}",
                    start_line=1 + 10 * i,
                    end_line=9 + 10 * i,
                    loc=rng.choice([10, 71, 140, 280]),
                    cyclomatic=rng.choice([1, 11, 22, 44]),
                    max_nesting=rng.choice([0, 5, 16]),
                    arity=rng.choice([1, 6, 20]),
                )
                for i in range(rng.randint(0, 10))
            ),
            total_loc=rng.choice([100, 601, 1300]),
            line_count=1400,
            duplication_ratio=rng.choice([0.0, 0.2, 0.7]),
            comment_density=rng.choice([0.0, 0.3]),
        )
        findings = detect_smells(fm)
        base = score_file(fm.unit.path, findings).score
        assert 1.0 <= base <= 10.0
        for drop in range(len(findings)):
            mutated = findings[:drop] + findings[drop + 1 :]
            assert score_file(fm.unit.path, mutated).score >= base


def test_determinism_repeat_runs_and_worker_counts_byte_identical():
    def run_documents(workers):
        config = WorkbenchConfig(
            analysis=AnalysisConfig(include=("**/*",), workers=workers)
        )
        result = analyze_project(str(CORPUS), config.analysis)
        healths, reports = [], {}
        for fm in result.files:
            healths.append(score_file(fm.unit.path, detect_smells(fm, config.thresholds)))
            reports[fm.unit.path] = maintainability_index(fm)
        project = aggregate_project(healths, list(result.files), config.weighting)
        health_bytes = json.dumps(
            health_document(project, reports, config, result.warnings)
        ).encode()
        analysis_bytes = json.dumps(analysis_document(result, config)).encode()
        return health_bytes, analysis_bytes

    first = run_documents(workers=1)
    second = run_documents(workers=1)
    parallel = run_documents(workers=4)
    assert first == second
    assert first == parallel


def test_gate_exit_codes_follow_the_ci_contract(capsys):
    gate = FIXTURES / "gate"
    before = str(gate / "before.json")

    assert cli.main(["gate", before, str(gate / "after_pass.json")]) == 0
    assert cli.main(["gate", before, str(gate / "after_fail.json")]) == 1
    assert cli.main(["gate", before, str(gate / "malformed.json")]) == 2
    capsys.readouterr()


def test_end_to_end_pipeline_matches_frozen_goldens(capsys, tmp_path):
    start = time.perf_counter()
    store = str(tmp_path / "bench.jsonl")
    out_dir = str(tmp_path / "eval")

    # stage 1: analyze the fixture corpus
    assert cli.main(["analyze", str(CORPUS)]) == 0

    # stage 2: ingest ten synthetic benchmark entries
    scores = [6.4, 5.8, 2.8, 5.0, 7.1, 3.5, 4.2, 7.9, 8.6, 9.4]
    for i, score in enumerate(scores):
        argv = [
            "bench", "add", "--store", store,
            "--project-id", f"synthetic-{i:02d}", "--score", str(score),
        ]
        assert cli.main(argv) == 0

    # stage 3: evaluate the golden scenario against that store
    argv = [
        "eval", str(FIXTURES / "scenario_demo.json"),
        "--store", store, "--out", out_dir,
    ]
    assert cli.main(argv) == 0
    capsys.readouterr()

    elapsed = time.perf_counter() - start
    assert elapsed < 5.0

    golden_eval = (GOLDENS / "evaluation.json").read_bytes()
    golden_roadmap = (GOLDENS / "roadmap.json").read_bytes()
    assert (tmp_path / "eval" / "evaluation.json").read_bytes() == golden_eval
    assert (tmp_path / "eval" / "roadmap.json").read_bytes() == golden_roadmap
