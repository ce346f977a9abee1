"""Benefit curve over the 1-10 health scale and its two breakpoints.

The curve maps health h to normalized benefit via a regularized logit:

    u = (h - 1) / 9
    L(u) = ln((u + epsilon) / (1 - u + epsilon))
    B(h) = (L(u) - L(0)) / (L(1) - L(0))

By construction B(1) = 0 and B(10) = 1 exactly, B is strictly
increasing, near-linear through the mid-range, and steep toward both
ends. The regularization epsilon keeps the logit finite at u = 0 and
u = 1; it is symmetric, so B(5.5) = 0.5 and the slope is minimal there.

The two breakpoints bound the near-linear mid-range: the lower one
(cost spiral trigger) and upper one (value cascade point) sit where the
local slope first reaches kSlope times the mid-range slope. Since the
slope grows without bound only as epsilon shrinks, a given epsilon caps
the attainable slope ratio at slope(1)/slope(5.5); kSlope at or above
that cap has no crossing and is rejected. Within the valid range,
raising kSlope pushes the breakpoints out toward 1 and 10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError, ParameterError


@dataclass(frozen=True)
class BenefitCurve:
    epsilon: float = 0.05
    k_slope: float = 1.5

    def __post_init__(self) -> None:
        if not self.epsilon > 0:
            raise ParameterError(f"epsilon must be positive, got {self.epsilon}")
        if not self.k_slope > 1:
            raise ParameterError(
                f"kSlope must exceed 1 (the mid-range slope is the minimum), got {self.k_slope}"
            )


@dataclass(frozen=True)
class Breakpoints:
    cost_spiral_trigger: float
    value_cascade_point: float


def _logit(u: float, epsilon: float) -> float:
    return math.log((u + epsilon) / (1.0 - u + epsilon))


def _check_level(h: float) -> None:
    if not 1.0 <= h <= 10.0:
        raise DomainError(f"health level must lie in [1, 10], got {h}")


def benefit_value(curve: BenefitCurve, h: float) -> float:
    """Normalized benefit at health h, in [0, 1]."""
    _check_level(h)
    u = (h - 1.0) / 9.0
    low = _logit(0.0, curve.epsilon)
    high = _logit(1.0, curve.epsilon)
    return (_logit(u, curve.epsilon) - low) / (high - low)


def benefit_slope(curve: BenefitCurve, h: float) -> float:
    """Analytic dB/dh at health h."""
    _check_level(h)
    u = (h - 1.0) / 9.0
    span = _logit(1.0, curve.epsilon) - _logit(0.0, curve.epsilon)
    du = 1.0 / (u + curve.epsilon) + 1.0 / (1.0 - u + curve.epsilon)
    return du / (9.0 * span)


def max_slope_ratio(curve: BenefitCurve) -> float:
    """slope(1) / slope(5.5): the largest attainable kSlope."""
    return benefit_slope(curve, 1.0) / benefit_slope(curve, 5.5)


def derive_breakpoints(curve: BenefitCurve) -> Breakpoints:
    """Health levels where the slope first reaches kSlope times the
    mid-range slope, one on each side of 5.5, found by bisection."""
    cap = max_slope_ratio(curve)
    if curve.k_slope >= cap:
        raise ParameterError(
            f"kSlope {curve.k_slope} is at or above the attainable slope ratio "
            f"{cap:.6f} for epsilon {curve.epsilon}; no breakpoint crossing exists"
        )
    target = curve.k_slope * benefit_slope(curve, 5.5)

    # slope decreases strictly from h=1 to 5.5, then increases to h=10
    lo, hi = 1.0, 5.5
    while hi - lo > 1e-9:
        mid = (lo + hi) / 2.0
        if benefit_slope(curve, mid) >= target:
            lo = mid
        else:
            hi = mid
    lower = (lo + hi) / 2.0

    lo, hi = 5.5, 10.0
    while hi - lo > 1e-9:
        mid = (lo + hi) / 2.0
        if benefit_slope(curve, mid) <= target:
            lo = mid
        else:
            hi = mid
    upper = (lo + hi) / 2.0

    return Breakpoints(cost_spiral_trigger=lower, value_cascade_point=upper)
