"""Canonical structured documents.

Every artifact the workbench reads or writes is JSON with a "schema"
tag, fixed key order, two-space indentation, UTF-8, LF line endings,
and a trailing newline. Builders construct dicts in a fixed insertion
order and dumps never sort keys, so serialization is byte-deterministic
for equal inputs. No document carries a timestamp (benchmark entries
record one explicitly as data).

Schemas:
  analysis.v1    - raw per-file measurements
  health.v1      - scores, findings, maintainability index per file
  scenario.v1    - what-if evaluation input
  evaluation.v1  - target evaluation result
  roadmap.v1     - plot-ready series and markers
  evalresult.v1  - evaluation + roadmap combined (service/CLI response)
  gate.v1        - gate verdict
  distribution.v1 - benchmark percentile summary
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any, Mapping

from . import __version__
from .benchmark import BenchmarkDistribution, BenchmarkEntry
from .config import WorkbenchConfig, config_digest
from .errors import InputError
from .health import (
    FileHealth,
    MaintainabilityIndexReport,
    ProjectHealth,
    SmellFinding,
)
from .metrics.types import AnalysisResult, FileMetrics
from .model.benefit import BenefitCurve
from .model.cost import BarrierCategory, CostModel, InvestmentBarrier, place_barriers
from .model.evaluate import RoadmapData, RoadmapScenario, TargetEvaluation
from .model.gate import GateResult

ANALYSIS_SCHEMA = "analysis.v1"
HEALTH_SCHEMA = "health.v1"
SCENARIO_SCHEMA = "scenario.v1"
EVALUATION_SCHEMA = "evaluation.v1"
ROADMAP_SCHEMA = "roadmap.v1"
EVALRESULT_SCHEMA = "evalresult.v1"
GATE_SCHEMA = "gate.v1"
DISTRIBUTION_SCHEMA = "distribution.v1"


def canonical_json(document: Mapping[str, Any]) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def write_document(path: str, document: Mapping[str, Any]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(canonical_json(document))


def read_document(path: str, expected_schema: str | None = None) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path} must contain a JSON object")
    if expected_schema is not None and data.get("schema") != expected_schema:
        raise InputError(
            f"{path} has schema {data.get('schema')!r}, expected {expected_schema!r}"
        )
    return data


# --- analysis.v1 ------------------------------------------------------------


def _file_metrics_body(fm: FileMetrics) -> dict:
    return {
        "path": fm.unit.path,
        "languageTag": fm.unit.language_tag,
        "contentHash": fm.unit.content_hash,
        "lineCount": fm.unit.line_count,
        "tokenCount": fm.unit.token_count,
        "totalLoc": fm.total_loc,
        "commentDensity": fm.comment_density,
        "duplicationRatio": fm.duplication_ratio,
        "functions": [
            {
                "name": fn.name,
                "startLine": fn.start_line,
                "endLine": fn.end_line,
                "loc": fn.loc,
                "cyclomatic": fn.cyclomatic,
                "maxNesting": fn.max_nesting,
                "arity": fn.arity,
                "halsteadVolume": fn.halstead_volume,
                "commentLines": fn.comment_lines,
            }
            for fn in fm.functions
        ],
    }


def analysis_document(result: AnalysisResult, config: WorkbenchConfig) -> dict:
    return {
        "schema": ANALYSIS_SCHEMA,
        "toolVersion": __version__,
        "configDigest": config_digest(config),
        "files": [_file_metrics_body(fm) for fm in result.files],
        "warnings": [{"path": w.path, "message": w.message} for w in result.warnings],
    }


# --- health.v1 --------------------------------------------------------------


def _finding_body(finding: SmellFinding) -> dict:
    return {
        "kind": finding.kind.value,
        "startLine": finding.start_line,
        "endLine": finding.end_line,
        "severity": finding.severity.value,
        "evidence": [
            {"metric": e.metric, "observed": e.observed, "threshold": e.threshold}
            for e in finding.evidence
        ],
    }


def health_document(
    project: ProjectHealth,
    mi_reports: Mapping[str, MaintainabilityIndexReport],
    config: WorkbenchConfig,
    warnings: tuple = (),
) -> dict:
    return {
        "schema": HEALTH_SCHEMA,
        "toolVersion": __version__,
        "configDigest": config_digest(config),
        "project": {
            "score": project.score,
            "weighting": project.weighting,
            "weightsDigest": project.weights_digest,
        },
        "files": [
            {
                "path": fh.path,
                "score": fh.score,
                "penaltyBreakdown": dict(fh.penalty_breakdown),
                "findings": [_finding_body(f) for f in fh.findings],
                "maintainabilityIndex": {
                    "mi": mi_reports[fh.path].mi,
                    "normalizedMi": mi_reports[fh.path].normalized_mi,
                    "components": dict(mi_reports[fh.path].components),
                },
            }
            for fh in project.files
        ],
        "warnings": [{"path": w.path, "message": w.message} for w in warnings],
    }


def parse_health_scores(data: dict, path_label: str = "health document") -> ProjectHealth:
    """Rebuild just the score structure of a health.v1 document, enough
    for gating; findings and evidence are not round-tripped."""
    try:
        files = tuple(
            FileHealth(
                path=entry["path"],
                score=float(entry["score"]),
                findings=(),
                penalty_breakdown={},
            )
            for entry in data["files"]
        )
        return ProjectHealth(
            score=float(data["project"]["score"]),
            files=files,
            weighting=data["project"].get("weighting", ""),
            weights_digest=data["project"].get("weightsDigest", ""),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path_label} is malformed: {exc}") from None


# --- scenario.v1 ------------------------------------------------------------


def _barrier_body(barrier: InvestmentBarrier) -> dict:
    return {
        "category": barrier.category.value,
        "position": barrier.position,
        "fixedCost": barrier.fixed_cost,
        "rationale": barrier.rationale,
    }


def scenario_document(scenario: RoadmapScenario) -> dict:
    doc: dict[str, Any] = {
        "schema": SCENARIO_SCHEMA,
        "projectId": scenario.project_id,
        "currentLevel": scenario.current_level,
        "targetLevel": scenario.target_level,
        "curve": {
            "epsilon": scenario.curve.epsilon,
            "kSlope": scenario.curve.k_slope,
        },
        "cost": {
            "baseMarginalCost": scenario.cost_model.base_marginal_cost,
            "escalation": scenario.cost_model.escalation,
            "barrierSpacing": scenario.cost_model.barrier_spacing,
            "barriers": [_barrier_body(b) for b in scenario.cost_model.barrier_plan],
        },
    }
    if scenario.gate_policy is not None:
        gate: dict[str, Any] = {"policy": scenario.gate_policy}
        if scenario.gate_floor is not None:
            gate["floor"] = scenario.gate_floor
        doc["gate"] = gate
    if scenario.benchmark_scores:
        doc["benchmark"] = {"scores": list(scenario.benchmark_scores)}
    elif scenario.benchmark is not None:
        doc["benchmark"] = {
            "n": scenario.benchmark.n,
            "p10": scenario.benchmark.p10,
            "p50": scenario.benchmark.p50,
            "p90": scenario.benchmark.p90,
        }
    return doc


def _require_number(data: Mapping[str, Any], key: str, label: str) -> float:
    value = data.get(key)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise InputError(f"{label}.{key} must be a number")
    return float(value)


def parse_scenario(data: dict) -> RoadmapScenario:
    allowed = {"schema", "projectId", "currentLevel", "targetLevel", "curve", "cost", "gate", "benchmark"}
    unknown = set(data) - allowed
    if unknown:
        raise InputError(f"unknown scenario keys: {', '.join(sorted(unknown))}")
    project_id = data.get("projectId")
    if not isinstance(project_id, str) or not project_id:
        raise InputError("scenario.projectId must be a non-empty string")
    current = _require_number(data, "currentLevel", "scenario")
    target = _require_number(data, "targetLevel", "scenario")

    curve_data = data.get("curve") or {}
    if not isinstance(curve_data, dict):
        raise InputError("scenario.curve must be an object")
    curve = BenefitCurve(
        epsilon=float(curve_data.get("epsilon", 0.05)),
        k_slope=float(curve_data.get("kSlope", 1.5)),
    )

    cost_data = data.get("cost") or {}
    if not isinstance(cost_data, dict):
        raise InputError("scenario.cost must be an object")
    base = float(cost_data.get("baseMarginalCost", 10.0))
    escalation = float(cost_data.get("escalation", 2.0))
    spacing = float(cost_data.get("barrierSpacing", 1.5))
    if "barriers" in cost_data and cost_data["barriers"] is not None:
        raw_barriers = cost_data["barriers"]
        if not isinstance(raw_barriers, list):
            raise InputError("scenario.cost.barriers must be a list")
        barriers = []
        for raw in raw_barriers:
            if not isinstance(raw, dict):
                raise InputError("each barrier must be an object")
            category_name = raw.get("category")
            try:
                category = BarrierCategory(category_name)
            except ValueError:
                names = ", ".join(c.value for c in BarrierCategory)
                raise InputError(
                    f"unknown barrier category {category_name!r}; expected one of {names}"
                ) from None
            barriers.append(
                InvestmentBarrier(
                    category=category,
                    position=_require_number(raw, "position", "barrier"),
                    fixed_cost=_require_number(raw, "fixedCost", "barrier"),
                    rationale=str(raw.get("rationale", "")),
                )
            )
        plan = tuple(barriers)
    else:
        plan = tuple(place_barriers(current, spacing))
    cost_model = CostModel(
        current_level=current,
        base_marginal_cost=base,
        escalation=escalation,
        barrier_spacing=spacing,
        barrier_plan=plan,
    )

    gate_policy = None
    gate_floor = None
    if data.get("gate") is not None:
        gate_data = data["gate"]
        if not isinstance(gate_data, dict):
            raise InputError("scenario.gate must be an object")
        gate_policy = gate_data.get("policy")
        if "floor" in gate_data:
            gate_floor = _require_number(gate_data, "floor", "scenario.gate")

    benchmark = None
    benchmark_scores = None
    if data.get("benchmark") is not None:
        bench_data = data["benchmark"]
        if not isinstance(bench_data, dict):
            raise InputError("scenario.benchmark must be an object")
        if "scores" in bench_data:
            raw_scores = bench_data["scores"]
            if not isinstance(raw_scores, list) or not all(
                isinstance(s, (int, float)) and not isinstance(s, bool) for s in raw_scores
            ):
                raise InputError("scenario.benchmark.scores must be a list of numbers")
            benchmark_scores = tuple(float(s) for s in raw_scores)
        else:
            benchmark = BenchmarkDistribution(
                filter=(),
                n=int(bench_data.get("n", 0)),
                p10=_require_number(bench_data, "p10", "scenario.benchmark"),
                p50=_require_number(bench_data, "p50", "scenario.benchmark"),
                p90=_require_number(bench_data, "p90", "scenario.benchmark"),
            )

    return RoadmapScenario(
        project_id=project_id,
        current_level=current,
        target_level=target,
        curve=curve,
        cost_model=cost_model,
        gate_policy=gate_policy,
        gate_floor=gate_floor,
        benchmark=benchmark,
        benchmark_scores=benchmark_scores,
    )


# --- evaluation.v1 / roadmap.v1 / evalresult.v1 ------------------------------


def evaluation_body(evaluation: TargetEvaluation) -> dict:
    return {
        "projectId": evaluation.project_id,
        "currentLevel": evaluation.current_level,
        "targetLevel": evaluation.target_level,
        "benefitDelta": evaluation.benefit_delta,
        "totalCost": evaluation.total_cost,
        "barriersCrossed": [_barrier_body(b) for b in evaluation.barriers_crossed],
        "escalationZone": {
            "from": evaluation.escalation_zone[0],
            "to": evaluation.escalation_zone[1],
        },
        "targetPercentile": evaluation.target_percentile,
        "leadersGapNote": evaluation.leaders_gap_note,
    }


def evaluation_document(evaluation: TargetEvaluation) -> dict:
    return {"schema": EVALUATION_SCHEMA, **evaluation_body(evaluation)}


def roadmap_body(scenario: RoadmapScenario, roadmap: RoadmapData) -> dict:
    return {
        "projectId": scenario.project_id,
        "currentLevel": scenario.current_level,
        "targetLevel": scenario.target_level,
        "breakpoints": {
            "costSpiralTrigger": roadmap.breakpoints.cost_spiral_trigger,
            "valueCascadePoint": roadmap.breakpoints.value_cascade_point,
        },
        "benefitSeries": [[h, value] for h, value in roadmap.benefit_points],
        "costSeries": [
            {"level": p.level, "marginal": p.marginal, "band": p.band}
            for p in roadmap.cost_points
        ],
        "markers": [
            {"kind": m.kind, "position": m.position, "label": m.label}
            for m in roadmap.markers
        ],
    }


def roadmap_document(scenario: RoadmapScenario, roadmap: RoadmapData) -> dict:
    return {"schema": ROADMAP_SCHEMA, **roadmap_body(scenario, roadmap)}


def evalresult_document(
    scenario: RoadmapScenario, evaluation: TargetEvaluation, roadmap: RoadmapData
) -> dict:
    return {
        "schema": EVALRESULT_SCHEMA,
        "evaluation": evaluation_body(evaluation),
        "roadmap": roadmap_body(scenario, roadmap),
    }


def scenario_with_store_scores(scenario: RoadmapScenario, scores: list[float]) -> RoadmapScenario:
    """Benchmark-store scores take precedence over whatever benchmark
    context the scenario document carried. The CLI and the service both
    route through here so their outputs stay byte-identical."""
    if not scores:
        return scenario
    return dataclasses.replace(
        scenario, benchmark_scores=tuple(scores), benchmark=None
    )


# --- gate.v1 and distribution.v1 ---------------------------------------------


def gate_document(result: GateResult) -> dict:
    return {
        "schema": GATE_SCHEMA,
        "policy": result.policy,
        "passed": result.passed,
        "floorLevel": result.floor_level,
        "violations": [
            {"path": v.path, "before": v.before, "after": v.after}
            for v in result.violations
        ],
    }


def distribution_document(dist: BenchmarkDistribution) -> dict:
    return {
        "schema": DISTRIBUTION_SCHEMA,
        "filter": dict(dist.filter),
        "n": dist.n,
        "p10": dist.p10,
        "p50": dist.p50,
        "p90": dist.p90,
        "method": dist.method,
    }


def entry_body(entry: BenchmarkEntry) -> dict:
    return {
        "projectId": entry.project_id,
        "score": entry.score,
        "tags": dict(entry.tags),
        "recordedAt": entry.recorded_at,
    }
