"""Smell detection and health scoring on the 1-10 scale.

Nine detectors run over FileMetrics. A detector fires on a strict
threshold violation and its severity follows the excess ratio: at least
the threshold is minor, at least twice is major, at least four times is
critical. Two detectors override the ratio rule: BrainMethod is always
critical (the conjunction of long, complex, and nested is the worst
offender) and LowComment is always minor (a sparse-comment signal is
weak on its own). Conjunction detectors rate severity by their weakest
leg, so a finding is only as bad as the least-violated condition.

Penalties deduct 0.5 / 1.0 / 2.0 points per minor / major / critical
finding from a starting score of 10, clamped to [1, 10].

The classical maintainability index is computed alongside as a
comparison metric:

    mi = 171 - 5.2*ln(max(meanVolume, 1)) - 0.23*meanCyclomatic
             - 16.2*ln(max(totalLoc, 1)) + 50*sin(sqrt(2.4*commentDensity))

normalizedMi rescales by 100/171 and clamps into [0, 100]; the comment
bonus can push mi past 171, so the clamp applies at both ends.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .errors import InputError
from .metrics.types import FileMetrics


class SmellKind(Enum):
    LONG_FUNCTION = "LongFunction"
    COMPLEX_FUNCTION = "ComplexFunction"
    DEEP_NESTING = "DeepNesting"
    MANY_ARGUMENTS = "ManyArguments"
    BRAIN_METHOD = "BrainMethod"
    GOD_MODULE = "GodModule"
    DUPLICATION = "Duplication"
    LARGE_FILE = "LargeFile"
    LOW_COMMENT = "LowComment"


class Severity(Enum):
    MINOR = "minor"
    MAJOR = "major"
    CRITICAL = "critical"


PENALTY_POINTS: Mapping[Severity, float] = {
    Severity.MINOR: 0.5,
    Severity.MAJOR: 1.0,
    Severity.CRITICAL: 2.0,
}

_KIND_ORDER = {kind: index for index, kind in enumerate(SmellKind)}

WEIGHTING_BY_LOC = "byLoc"
WEIGHTING_BY_CHANGE_FREQUENCY = "byChangeFrequency"
WEIGHTINGS = (WEIGHTING_BY_LOC, WEIGHTING_BY_CHANGE_FREQUENCY)


@dataclass(frozen=True)
class Evidence:
    metric: str
    observed: float
    threshold: float


@dataclass(frozen=True)
class SmellFinding:
    kind: SmellKind
    path: str
    start_line: int
    end_line: int
    severity: Severity
    evidence: tuple[Evidence, ...]


@dataclass(frozen=True)
class ThresholdConfig:
    long_function_loc: int = 70
    complex_function_cyclomatic: int = 10
    deep_nesting_depth: int = 4
    many_arguments_arity: int = 5
    brain_method_nesting: int = 3
    god_module_functions: int = 30
    god_module_loc: int = 1000
    duplication_ratio: float = 0.15
    large_file_loc: int = 600
    low_comment_density: float = 0.02
    low_comment_min_loc: int = 200


@dataclass(frozen=True)
class FileHealth:
    path: str
    score: float
    findings: tuple[SmellFinding, ...]
    penalty_breakdown: Mapping[str, float]


@dataclass(frozen=True)
class ProjectHealth:
    score: float
    files: tuple[FileHealth, ...]
    weighting: str
    weights_digest: str


@dataclass(frozen=True)
class MaintainabilityIndexReport:
    path: str
    mi: float
    normalized_mi: float
    components: Mapping[str, float]


def _ratio_severity(ratio: float) -> Severity:
    if ratio >= 4.0:
        return Severity.CRITICAL
    if ratio >= 2.0:
        return Severity.MAJOR
    return Severity.MINOR


def detect_smells(fm: FileMetrics, thresholds: ThresholdConfig | None = None) -> list[SmellFinding]:
    """All findings for one file, ordered by line then detector."""
    t = thresholds or ThresholdConfig()
    path = fm.unit.path
    findings: list[SmellFinding] = []

    for fn in fm.functions:
        if fn.loc > t.long_function_loc:
            findings.append(
                SmellFinding(
                    SmellKind.LONG_FUNCTION,
                    path,
                    fn.start_line,
                    fn.end_line,
                    _ratio_severity(fn.loc / t.long_function_loc),
                    (Evidence("loc", fn.loc, t.long_function_loc),),
                )
            )
        if fn.cyclomatic > t.complex_function_cyclomatic:
            findings.append(
                SmellFinding(
                    SmellKind.COMPLEX_FUNCTION,
                    path,
                    fn.start_line,
                    fn.end_line,
                    _ratio_severity(fn.cyclomatic / t.complex_function_cyclomatic),
                    (Evidence("cyclomatic", fn.cyclomatic, t.complex_function_cyclomatic),),
                )
            )
        if fn.max_nesting > t.deep_nesting_depth:
            findings.append(
                SmellFinding(
                    SmellKind.DEEP_NESTING,
                    path,
                    fn.start_line,
                    fn.end_line,
                    _ratio_severity(fn.max_nesting / t.deep_nesting_depth),
                    (Evidence("maxNesting", fn.max_nesting, t.deep_nesting_depth),),
                )
            )
        if fn.arity > t.many_arguments_arity:
            findings.append(
                SmellFinding(
                    SmellKind.MANY_ARGUMENTS,
                    path,
                    fn.start_line,
                    fn.end_line,
                    _ratio_severity(fn.arity / t.many_arguments_arity),
                    (Evidence("arity", fn.arity, t.many_arguments_arity),),
                )
            )
        if (
            fn.loc > t.long_function_loc
            and fn.cyclomatic > t.complex_function_cyclomatic
            and fn.max_nesting > t.brain_method_nesting
        ):
            findings.append(
                SmellFinding(
                    SmellKind.BRAIN_METHOD,
                    path,
                    fn.start_line,
                    fn.end_line,
                    Severity.CRITICAL,
                    (
                        Evidence("loc", fn.loc, t.long_function_loc),
                        Evidence("cyclomatic", fn.cyclomatic, t.complex_function_cyclomatic),
                        Evidence("maxNesting", fn.max_nesting, t.brain_method_nesting),
                    ),
                )
            )

    file_end = max(fm.unit.line_count, 1)
    if len(fm.functions) > t.god_module_functions and fm.total_loc > t.god_module_loc:
        ratio = min(
            len(fm.functions) / t.god_module_functions,
            fm.total_loc / t.god_module_loc,
        )
        findings.append(
            SmellFinding(
                SmellKind.GOD_MODULE,
                path,
                1,
                file_end,
                _ratio_severity(ratio),
                (
                    Evidence("functionCount", len(fm.functions), t.god_module_functions),
                    Evidence("totalLoc", fm.total_loc, t.god_module_loc),
                ),
            )
        )
    if fm.duplication_ratio > t.duplication_ratio:
        findings.append(
            SmellFinding(
                SmellKind.DUPLICATION,
                path,
                1,
                file_end,
                _ratio_severity(fm.duplication_ratio / t.duplication_ratio),
                (Evidence("duplicationRatio", fm.duplication_ratio, t.duplication_ratio),),
            )
        )
    if fm.total_loc > t.large_file_loc:
        findings.append(
            SmellFinding(
                SmellKind.LARGE_FILE,
                path,
                1,
                file_end,
                _ratio_severity(fm.total_loc / t.large_file_loc),
                (Evidence("totalLoc", fm.total_loc, t.large_file_loc),),
            )
        )
    if fm.comment_density < t.low_comment_density and fm.total_loc > t.low_comment_min_loc:
        findings.append(
            SmellFinding(
                SmellKind.LOW_COMMENT,
                path,
                1,
                file_end,
                Severity.MINOR,
                (
                    Evidence("commentDensity", fm.comment_density, t.low_comment_density),
                    Evidence("totalLoc", fm.total_loc, t.low_comment_min_loc),
                ),
            )
        )

    findings.sort(key=lambda f: (f.path, f.start_line, _KIND_ORDER[f.kind]))
    return findings


def score_file(path: str, findings: list[SmellFinding]) -> FileHealth:
    """Penalty-based score: 10 minus per-finding deductions, floored at 1."""
    breakdown: dict[str, float] = {}
    for finding in findings:
        points = PENALTY_POINTS[finding.severity]
        breakdown[finding.kind.value] = breakdown.get(finding.kind.value, 0.0) + points
    total_penalty = sum(breakdown.values())
    score = min(10.0, max(1.0, 10.0 - total_penalty))
    return FileHealth(
        path=path,
        score=score,
        findings=tuple(findings),
        penalty_breakdown=dict(sorted(breakdown.items())),
    )


def aggregate_project(
    files: list[FileHealth],
    metrics: list[FileMetrics],
    weighting: str = WEIGHTING_BY_LOC,
    change_counts: Mapping[str, int] | None = None,
) -> ProjectHealth:
    """Weighted mean of file scores; weights depend on the chosen scheme."""
    if not files:
        raise InputError("cannot aggregate an empty file list")
    if weighting not in WEIGHTINGS:
        raise InputError(f"unknown weighting: {weighting}")
    metrics_by_path = {fm.unit.path: fm for fm in metrics}

    weights: dict[str, float] = {}
    for fh in files:
        fm = metrics_by_path.get(fh.path)
        if fm is None:
            raise InputError(f"no metrics for scored file: {fh.path}")
        weight = float(max(fm.total_loc, 1))
        if weighting == WEIGHTING_BY_CHANGE_FREQUENCY:
            if change_counts is None or fh.path not in change_counts:
                raise InputError(f"missing change count for path: {fh.path}")
            weight *= 1.0 + math.log2(1 + change_counts[fh.path])
        weights[fh.path] = weight

    total_weight = sum(weights.values())
    score = sum(weights[fh.path] * fh.score for fh in files) / total_weight

    digest_input = "".join(
        f"{path}={weights[path]!r}\n" for path in sorted(weights)
    )
    return ProjectHealth(
        score=score,
        files=tuple(sorted(files, key=lambda fh: fh.path)),
        weighting=weighting,
        weights_digest=hashlib.sha256(digest_input.encode("utf-8")).hexdigest(),
    )


def maintainability_index(fm: FileMetrics) -> MaintainabilityIndexReport:
    """Classical 4-term index with the sine comment bonus."""
    if fm.functions:
        mean_volume = sum(f.halstead_volume for f in fm.functions) / len(fm.functions)
        mean_cyclomatic = sum(f.cyclomatic for f in fm.functions) / len(fm.functions)
    else:
        mean_volume = 0.0
        mean_cyclomatic = 1.0

    volume_term = -5.2 * math.log(max(mean_volume, 1.0))
    cc_term = -0.23 * mean_cyclomatic
    loc_term = -16.2 * math.log(max(fm.total_loc, 1))
    comment_term = 50.0 * math.sin(math.sqrt(2.4 * fm.comment_density))
    mi = 171.0 + volume_term + cc_term + loc_term + comment_term

    return MaintainabilityIndexReport(
        path=fm.unit.path,
        mi=mi,
        normalized_mi=min(100.0, max(0.0, mi * 100.0 / 171.0)),
        components={
            "volumeTerm": volume_term,
            "ccTerm": cc_term,
            "locTerm": loc_term,
            "commentTerm": comment_term,
        },
    )
