"""Quality gates over before/after health snapshots.

Two policies:

* noDecline: fail when any file present in both snapshots, or the
  project score, drops by more than a 1e-9 grace (so float noise in an
  unchanged pipeline never fails a build);
* floor: fail when any file, or the project score, sits below an
  absolute level; files new in the after snapshot are checked too,
  since they have no earlier score to decline from.

The project-level score is reported under the reserved path "<project>".
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError
from ..health import ProjectHealth

POLICY_NO_DECLINE = "noDecline"
POLICY_FLOOR = "floor"
POLICIES = (POLICY_NO_DECLINE, POLICY_FLOOR)

PROJECT_PATH = "<project>"

DECLINE_GRACE = 1e-9


@dataclass(frozen=True)
class GateViolation:
    path: str
    before: float | None
    after: float


@dataclass(frozen=True)
class GateResult:
    policy: str
    passed: bool
    violations: tuple[GateViolation, ...]
    floor_level: float | None = None


def gate_check(
    before: ProjectHealth,
    after: ProjectHealth,
    policy: str = POLICY_NO_DECLINE,
    floor_level: float | None = None,
) -> GateResult:
    if policy not in POLICIES:
        raise InputError(f"unknown gate policy: {policy}")
    if not before.files or not after.files:
        raise InputError("gate check needs non-empty before and after file lists")

    before_scores = {fh.path: fh.score for fh in before.files}
    after_scores = {fh.path: fh.score for fh in after.files}
    violations: list[GateViolation] = []

    if policy == POLICY_NO_DECLINE:
        common = sorted(set(before_scores) & set(after_scores))
        if not common:
            raise InputError("before and after snapshots share no file paths")
        for path in common:
            if after_scores[path] < before_scores[path] - DECLINE_GRACE:
                violations.append(GateViolation(path, before_scores[path], after_scores[path]))
        if after.score < before.score - DECLINE_GRACE:
            violations.append(GateViolation(PROJECT_PATH, before.score, after.score))
        return GateResult(policy, not violations, tuple(violations))

    if floor_level is None or not 1.0 <= floor_level <= 10.0:
        raise InputError(
            f"floor policy requires a floor level in [1, 10], got {floor_level}"
        )
    for path in sorted(after_scores):
        if after_scores[path] < floor_level:
            violations.append(
                GateViolation(path, before_scores.get(path), after_scores[path])
            )
    if after.score < floor_level:
        violations.append(GateViolation(PROJECT_PATH, before.score, after.score))
    return GateResult(policy, not violations, tuple(violations), floor_level=floor_level)
