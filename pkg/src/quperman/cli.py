"""Command-line interface.

Subcommands: analyze, bench (add | stats | pos | seed), eval, gate,
serve. Exit codes are a CI contract: 0 success, 1 gate failure, 2 input
or configuration error, 3 internal error.

Flag values resolve CLI > environment > default; the environment
variable for --some-flag is QUPERMAN_SOME_FLAG.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import __version__, benchmark as bench_mod, documents
from .config import WorkbenchConfig, load_config
from .errors import WorkbenchError
from .health import aggregate_project, detect_smells, maintainability_index, score_file
from .metrics.analyze import analyze_project
from .model.evaluate import build_roadmap, evaluate_target
from .model.gate import POLICY_NO_DECLINE, gate_check

EXIT_OK = 0
EXIT_GATE_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3

ENV_PREFIX = "QUPERMAN_"

FORMAT_HUMAN = "human"
FORMAT_STRUCTURED = "structured"


@dataclass
class CommandResult:
    exit_code: int
    stdout: str
    warnings: tuple[str, ...] = ()


def _env(flag: str) -> str | None:
    return os.environ.get(ENV_PREFIX + flag.upper().replace("-", "_"))


def _resolve(value: str | None, flag: str, default: str | None = None) -> str | None:
    if value is not None:
        return value
    env_value = _env(flag)
    if env_value is not None:
        return env_value
    return default


def _parse_tag_pairs(pairs: list[str] | None) -> dict[str, str]:
    tags: dict[str, str] = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise WorkbenchError(f"tag must look like key=value, got {pair!r}")
        tags[key] = value
    return tags


def _health_pipeline(root: str, config: WorkbenchConfig):
    """analyze -> detect -> score -> aggregate; shared by CLI and service."""
    result = analyze_project(root, config.analysis)
    file_healths = []
    mi_reports = {}
    for fm in result.files:
        findings = detect_smells(fm, config.thresholds)
        file_healths.append(score_file(fm.unit.path, findings))
        mi_reports[fm.unit.path] = maintainability_index(fm)
    change_counts = config.change_count_map() or None
    project = aggregate_project(
        file_healths, list(result.files), config.weighting, change_counts
    )
    return result, project, mi_reports


# --- analyze -----------------------------------------------------------------


def cmd_analyze(root: str, config_path: str | None, out_path: str | None, fmt: str) -> CommandResult:
    config = load_config(config_path)
    result, project, mi_reports = _health_pipeline(root, config)
    health_doc = documents.health_document(project, mi_reports, config, result.warnings)

    if out_path:
        if os.path.isdir(out_path):
            documents.write_document(os.path.join(out_path, "health.json"), health_doc)
            documents.write_document(
                os.path.join(out_path, "analysis.json"),
                documents.analysis_document(result, config),
            )
        else:
            documents.write_document(out_path, health_doc)

    if fmt == FORMAT_STRUCTURED:
        stdout = documents.canonical_json(health_doc)
    else:
        lines = [
            f"project health {project.score:.2f} / 10 ({project.weighting}, "
            f"{len(project.files)} files)"
        ]
        for fh in project.files:
            lines.append(f"  {fh.score:5.2f}  {fh.path}  ({len(fh.findings)} findings)")
        for warning in result.warnings:
            lines.append(f"warning: {warning.path}: {warning.message}")
        stdout = "\n".join(lines) + "\n"
    return CommandResult(EXIT_OK, stdout)


# --- bench -------------------------------------------------------------------


def cmd_bench_add(
    store_path: str,
    project_id: str,
    score: float,
    tags: dict[str, str],
    recorded_at: str,
) -> CommandResult:
    store = bench_mod.load_store(store_path)
    entry = bench_mod.ingest_entry(store, project_id, score, tags, recorded_at)
    bench_mod.save_store(store, store_path)
    doc = {"schema": "ingest.v1", "stored": documents.entry_body(entry), "count": len(store)}
    return CommandResult(EXIT_OK, documents.canonical_json(doc))


def cmd_bench_stats(store_path: str, tag_filters: dict[str, str], fmt: str) -> CommandResult:
    store = bench_mod.load_store(store_path)
    dist = bench_mod.distribution(store, tag_filters)
    if fmt == FORMAT_STRUCTURED:
        stdout = documents.canonical_json(documents.distribution_document(dist))
    else:
        stdout = (
            f"n={dist.n}  Laggards p10={dist.p10}  median p50={dist.p50}  "
            f"Leaders p90={dist.p90}  ({dist.method})\n"
        )
    return CommandResult(EXIT_OK, stdout)


def cmd_bench_pos(
    store_path: str, score: float, tag_filters: dict[str, str], fmt: str
) -> CommandResult:
    store = bench_mod.load_store(store_path)
    scores = bench_mod.matching_scores(store, tag_filters)
    percentile = bench_mod.percentile_of(score, scores)
    if fmt == FORMAT_STRUCTURED:
        doc = {
            "schema": "position.v1",
            "score": score,
            "n": len(scores),
            "percentile": percentile,
        }
        stdout = documents.canonical_json(doc)
    else:
        stdout = f"score {score} sits at percentile {percentile:.1f} of {len(scores)} entries\n"
    return CommandResult(EXIT_OK, stdout)


def cmd_bench_seed(store_path: str) -> CommandResult:
    store = bench_mod.load_sample_store()
    bench_mod.save_store(store, store_path)
    return CommandResult(EXIT_OK, f"seeded {len(store)} sample entries into {store_path}\n")


# --- eval --------------------------------------------------------------------


def cmd_eval(
    scenario_path: str,
    store_path: str | None,
    out_path: str | None,
    fmt: str,
) -> CommandResult:
    data = documents.read_document(scenario_path, documents.SCENARIO_SCHEMA)
    scenario = documents.parse_scenario(data)

    warnings: list[str] = []
    if store_path:
        store = bench_mod.load_store(store_path)
        scores = bench_mod.matching_scores(store)
        scenario = documents.scenario_with_store_scores(scenario, scores)
        if not scores:
            warnings.append(f"benchmark store {store_path} is empty; no percentile context")

    evaluation = evaluate_target(scenario)
    roadmap = build_roadmap(scenario)

    if out_path:
        os.makedirs(out_path, exist_ok=True)
        documents.write_document(
            os.path.join(out_path, "evaluation.json"),
            documents.evaluation_document(evaluation),
        )
        documents.write_document(
            os.path.join(out_path, "roadmap.json"),
            documents.roadmap_document(scenario, roadmap),
        )

    if fmt == FORMAT_STRUCTURED:
        stdout = documents.canonical_json(
            documents.evalresult_document(scenario, evaluation, roadmap)
        )
    else:
        lines = [
            f"{scenario.project_id}: target {scenario.target_level} from "
            f"{scenario.current_level}",
            f"  benefit delta  {evaluation.benefit_delta:+.4f}",
            f"  total cost     {evaluation.total_cost:.2f} effort units",
            f"  escalation     [{evaluation.escalation_zone[0]}, {evaluation.escalation_zone[1]})",
        ]
        if evaluation.barriers_crossed:
            lines.append("  barriers crossed:")
            for barrier in evaluation.barriers_crossed:
                lines.append(
                    f"    at {barrier.position}: {barrier.category.value} "
                    f"(+{barrier.fixed_cost:g}): {barrier.rationale}"
                )
        else:
            lines.append("  barriers crossed: none")
        if evaluation.target_percentile is not None:
            lines.append(f"  target percentile {evaluation.target_percentile:.1f}")
        if evaluation.leaders_gap_note is not None:
            lines.append(f"  benchmark position: {evaluation.leaders_gap_note}")
        stdout = "\n".join(lines) + "\n"
        for warning in warnings:
            stdout += f"warning: {warning}\n"
    return CommandResult(EXIT_OK, stdout, tuple(warnings))


# --- gate --------------------------------------------------------------------


def cmd_gate(
    before_path: str,
    after_path: str,
    policy: str,
    floor_level: float | None,
    fmt: str,
) -> CommandResult:
    before = documents.parse_health_scores(
        documents.read_document(before_path, documents.HEALTH_SCHEMA), before_path
    )
    after = documents.parse_health_scores(
        documents.read_document(after_path, documents.HEALTH_SCHEMA), after_path
    )
    result = gate_check(before, after, policy, floor_level)

    if fmt == FORMAT_STRUCTURED:
        stdout = documents.canonical_json(documents.gate_document(result))
    else:
        verdict = "PASS" if result.passed else "FAIL"
        lines = [f"gate {result.policy}: {verdict}"]
        for v in result.violations:
            before_text = "-" if v.before is None else f"{v.before:.2f}"
            lines.append(f"  {v.path}: {before_text} -> {v.after:.2f}")
        stdout = "\n".join(lines) + "\n"
    return CommandResult(EXIT_OK if result.passed else EXIT_GATE_FAILED, stdout)


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quperman",
        description="maintainability target-setting workbench",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="measure a source tree and score its health")
    p_analyze.add_argument("root", help="root directory of the source tree")
    p_analyze.add_argument("--config", help="workbench config file (JSON)")
    p_analyze.add_argument("--out", help="write health.v1 here (a directory also gets analysis.v1)")
    p_analyze.add_argument("--format", choices=[FORMAT_HUMAN, FORMAT_STRUCTURED])

    p_bench = sub.add_parser("bench", help="manage the benchmark corpus")
    bench_sub = p_bench.add_subparsers(dest="bench_command", required=True)

    p_add = bench_sub.add_parser("add", help="add or replace one entry")
    p_add.add_argument("--store", help="benchmark store file")
    p_add.add_argument("--project-id", required=True)
    p_add.add_argument("--score", required=True, type=float)
    p_add.add_argument("--tag", action="append", metavar="KEY=VALUE")
    p_add.add_argument("--recorded-at", default="", help="ISO 8601 UTC timestamp")

    p_stats = bench_sub.add_parser("stats", help="percentile distribution of matching entries")
    p_stats.add_argument("--store", help="benchmark store file")
    p_stats.add_argument("--filter", action="append", metavar="KEY=VALUE")
    p_stats.add_argument("--format", choices=[FORMAT_HUMAN, FORMAT_STRUCTURED])

    p_pos = bench_sub.add_parser("pos", help="percentile position of a score")
    p_pos.add_argument("--store", help="benchmark store file")
    p_pos.add_argument("--score", required=True, type=float)
    p_pos.add_argument("--filter", action="append", metavar="KEY=VALUE")
    p_pos.add_argument("--format", choices=[FORMAT_HUMAN, FORMAT_STRUCTURED])

    p_seed = bench_sub.add_parser("seed", help="write the bundled sample corpus to a store")
    p_seed.add_argument("--store", help="benchmark store file")

    p_eval = sub.add_parser("eval", help="evaluate a what-if target scenario")
    p_eval.add_argument("scenario", help="scenario.v1 file")
    p_eval.add_argument("--store", help="benchmark store for percentile context")
    p_eval.add_argument("--out", help="directory for evaluation.json and roadmap.json")
    p_eval.add_argument("--format", choices=[FORMAT_HUMAN, FORMAT_STRUCTURED])

    p_gate = sub.add_parser("gate", help="pass/fail two health snapshots")
    p_gate.add_argument("before", help="health.v1 before the change")
    p_gate.add_argument("after", help="health.v1 after the change")
    p_gate.add_argument("--policy", choices=["noDecline", "floor"])
    p_gate.add_argument("--floor", type=float, help="floor level for the floor policy")
    p_gate.add_argument("--format", choices=[FORMAT_HUMAN, FORMAT_STRUCTURED])

    p_serve = sub.add_parser("serve", help="run the local service")
    p_serve.add_argument("--bind", help="host:port (default 127.0.0.1:8787)")
    p_serve.add_argument("--store", help="benchmark store file")
    p_serve.add_argument("--config", help="workbench config file (JSON)")
    p_serve.add_argument("--root", help="source tree served at /api/v1/project/health")
    p_serve.add_argument("--ui", help="directory of static UI assets to serve at /")

    return parser


def _dispatch(args: argparse.Namespace) -> CommandResult:
    fmt = _resolve(getattr(args, "format", None), "format", FORMAT_HUMAN)
    if fmt not in (FORMAT_HUMAN, FORMAT_STRUCTURED):
        raise WorkbenchError(f"unknown format {fmt!r}")

    if args.command == "analyze":
        return cmd_analyze(
            args.root,
            _resolve(args.config, "config"),
            _resolve(args.out, "out"),
            fmt,
        )
    if args.command == "bench":
        store = _resolve(args.store, "store")
        if store is None:
            raise WorkbenchError("a benchmark store is required (--store or QUPERMAN_STORE)")
        if args.bench_command == "add":
            return cmd_bench_add(
                store,
                args.project_id,
                args.score,
                _parse_tag_pairs(args.tag),
                args.recorded_at,
            )
        if args.bench_command == "stats":
            return cmd_bench_stats(store, _parse_tag_pairs(args.filter), fmt)
        if args.bench_command == "pos":
            return cmd_bench_pos(store, args.score, _parse_tag_pairs(args.filter), fmt)
        return cmd_bench_seed(store)
    if args.command == "eval":
        return cmd_eval(
            args.scenario,
            _resolve(args.store, "store"),
            _resolve(args.out, "out"),
            fmt,
        )
    if args.command == "gate":
        policy = _resolve(args.policy, "policy", POLICY_NO_DECLINE)
        floor_text = _resolve(
            None if args.floor is None else str(args.floor), "floor"
        )
        floor_level = float(floor_text) if floor_text is not None else None
        return cmd_gate(args.before, args.after, policy, floor_level, fmt)
    if args.command == "serve":
        from .service import serve

        return serve(
            bind=_resolve(args.bind, "bind", "127.0.0.1:8787"),
            store_path=_resolve(args.store, "store"),
            config_path=_resolve(args.config, "config"),
            corpus_root=_resolve(args.root, "root"),
            ui_dir=_resolve(args.ui, "ui"),
        )
    raise WorkbenchError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _dispatch(args)
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except KeyboardInterrupt:
        return EXIT_OK
    except Exception as exc:  # noqa: BLE001 (last-resort boundary for exit code 3)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    if result.stdout:
        sys.stdout.write(result.stdout)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
