"""Workbench configuration: a single JSON document covering analysis
globs, frontend overrides, duplication window, smell thresholds, and
score weighting.

Unknown keys are rejected rather than ignored so a typo cannot silently
fall back to defaults. The config digest is a SHA-256 over the fully
resolved document (defaults filled in), which makes two analyses
comparable by digest alone.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .errors import InputError
from .health import WEIGHTINGS, WEIGHTING_BY_LOC, ThresholdConfig
from .metrics.discover import DEFAULT_EXCLUDE, DEFAULT_INCLUDE
from .metrics.duplication import DEFAULT_WINDOW_SIZE, MIN_WINDOW_SIZE
from .metrics.frontends import FRONTENDS
from .metrics.measure import NESTED_MODE_MERGE, NESTED_MODE_SEPARATE


@dataclass(frozen=True)
class AnalysisConfig:
    include: tuple[str, ...] = DEFAULT_INCLUDE
    exclude: tuple[str, ...] = DEFAULT_EXCLUDE
    frontend_overrides: tuple[tuple[str, str], ...] = ()
    window_size: int = DEFAULT_WINDOW_SIZE
    nested_mode: str = NESTED_MODE_SEPARATE
    workers: int = 1

    def overrides(self) -> dict[str, str]:
        return dict(self.frontend_overrides)


@dataclass(frozen=True)
class WorkbenchConfig:
    analysis: AnalysisConfig = AnalysisConfig()
    thresholds: ThresholdConfig = ThresholdConfig()
    weighting: str = WEIGHTING_BY_LOC
    change_counts: tuple[tuple[str, int], ...] = ()

    def change_count_map(self) -> dict[str, int]:
        return dict(self.change_counts)


_THRESHOLD_KEYS = {
    "longFunctionLoc": "long_function_loc",
    "complexFunctionCyclomatic": "complex_function_cyclomatic",
    "deepNestingDepth": "deep_nesting_depth",
    "manyArgumentsArity": "many_arguments_arity",
    "brainMethodNesting": "brain_method_nesting",
    "godModuleFunctions": "god_module_functions",
    "godModuleLoc": "god_module_loc",
    "duplicationRatio": "duplication_ratio",
    "largeFileLoc": "large_file_loc",
    "lowCommentDensity": "low_comment_density",
    "lowCommentMinLoc": "low_comment_min_loc",
}


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


def _string_list(value: object, label: str) -> tuple[str, ...]:
    _expect(
        isinstance(value, list) and all(isinstance(v, str) for v in value),
        f"{label} must be a list of strings",
    )
    return tuple(value)  # type: ignore[arg-type]


def parse_config(data: object) -> WorkbenchConfig:
    _expect(isinstance(data, dict), "config document must be an object")
    assert isinstance(data, dict)
    unknown = set(data) - {"analysis", "thresholds", "weighting", "changeCounts"}
    _expect(not unknown, f"unknown config keys: {', '.join(sorted(unknown))}")

    analysis = AnalysisConfig()
    if "analysis" in data:
        section = data["analysis"]
        _expect(isinstance(section, dict), "analysis section must be an object")
        allowed = {"include", "exclude", "frontends", "windowSize", "nestedFunctions", "workers"}
        unknown = set(section) - allowed
        _expect(not unknown, f"unknown analysis keys: {', '.join(sorted(unknown))}")
        kwargs: dict[str, object] = {}
        if "include" in section:
            kwargs["include"] = _string_list(section["include"], "analysis.include")
        if "exclude" in section:
            kwargs["exclude"] = _string_list(section["exclude"], "analysis.exclude")
        if "frontends" in section:
            overrides = section["frontends"]
            _expect(
                isinstance(overrides, dict)
                and all(isinstance(k, str) and isinstance(v, str) for k, v in overrides.items()),
                "analysis.frontends must map language tags to frontend names",
            )
            bad = sorted(set(overrides.values()) - set(FRONTENDS))
            _expect(not bad, f"unknown frontend names: {', '.join(bad)}")
            kwargs["frontend_overrides"] = tuple(sorted(overrides.items()))
        if "windowSize" in section:
            size = section["windowSize"]
            _expect(isinstance(size, int) and not isinstance(size, bool), "windowSize must be an integer")
            _expect(size >= MIN_WINDOW_SIZE, f"windowSize must be at least {MIN_WINDOW_SIZE}")
            kwargs["window_size"] = size
        if "nestedFunctions" in section:
            mode = section["nestedFunctions"]
            _expect(
                mode in (NESTED_MODE_SEPARATE, NESTED_MODE_MERGE),
                f"nestedFunctions must be '{NESTED_MODE_SEPARATE}' or '{NESTED_MODE_MERGE}'",
            )
            kwargs["nested_mode"] = mode
        if "workers" in section:
            workers = section["workers"]
            _expect(
                isinstance(workers, int) and not isinstance(workers, bool) and workers >= 1,
                "workers must be an integer >= 1",
            )
            kwargs["workers"] = workers
        analysis = AnalysisConfig(**kwargs)  # type: ignore[arg-type]

    thresholds = ThresholdConfig()
    if "thresholds" in data:
        section = data["thresholds"]
        _expect(isinstance(section, dict), "thresholds section must be an object")
        unknown = set(section) - set(_THRESHOLD_KEYS)
        _expect(not unknown, f"unknown threshold keys: {', '.join(sorted(unknown))}")
        kwargs = {}
        for doc_key, field_name in _THRESHOLD_KEYS.items():
            if doc_key not in section:
                continue
            value = section[doc_key]
            _expect(
                isinstance(value, (int, float)) and not isinstance(value, bool) and value > 0,
                f"threshold {doc_key} must be a positive number",
            )
            kwargs[field_name] = value
        thresholds = ThresholdConfig(**kwargs)  # type: ignore[arg-type]

    weighting = WEIGHTING_BY_LOC
    if "weighting" in data:
        weighting = data["weighting"]
        _expect(weighting in WEIGHTINGS, f"weighting must be one of {', '.join(WEIGHTINGS)}")

    change_counts: tuple[tuple[str, int], ...] = ()
    if "changeCounts" in data:
        counts = data["changeCounts"]
        _expect(
            isinstance(counts, dict)
            and all(
                isinstance(k, str) and isinstance(v, int) and not isinstance(v, bool) and v >= 0
                for k, v in counts.items()
            ),
            "changeCounts must map paths to non-negative integers",
        )
        change_counts = tuple(sorted(counts.items()))

    return WorkbenchConfig(
        analysis=analysis,
        thresholds=thresholds,
        weighting=weighting,
        change_counts=change_counts,
    )


def load_config(path: str | None) -> WorkbenchConfig:
    if path is None:
        return WorkbenchConfig()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read config file {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"config file {path} is not valid JSON: {exc}") from None
    return parse_config(data)


def config_document(config: WorkbenchConfig) -> dict:
    """The fully resolved config as a plain JSON-ready mapping."""
    thresholds = {
        doc_key: getattr(config.thresholds, field_name)
        for doc_key, field_name in _THRESHOLD_KEYS.items()
    }
    return {
        "analysis": {
            "include": list(config.analysis.include),
            "exclude": list(config.analysis.exclude),
            "frontends": dict(config.analysis.frontend_overrides),
            "windowSize": config.analysis.window_size,
            "nestedFunctions": config.analysis.nested_mode,
            "workers": config.analysis.workers,
        },
        "thresholds": thresholds,
        "weighting": config.weighting,
        "changeCounts": dict(config.change_counts),
    }


def config_digest(config: WorkbenchConfig) -> str:
    """SHA-256 over the resolved document; worker count is excluded so
    parallel and single-worker runs digest identically."""
    document = config_document(config)
    document["analysis"] = {k: v for k, v in document["analysis"].items() if k != "workers"}
    canonical = json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
