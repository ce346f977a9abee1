"""Benefit/cost target-setting model: curve, breakpoints, escalating
cost with investment barriers, quality gates, and roadmap assembly."""

from .benefit import (
    BenefitCurve,
    Breakpoints,
    benefit_slope,
    benefit_value,
    derive_breakpoints,
    max_slope_ratio,
)
from .cost import (
    DEFAULT_CATEGORY_CYCLE,
    DEFAULT_FIXED_COSTS,
    DEFAULT_RATIONALES,
    BarrierCategory,
    CostModel,
    InvestmentBarrier,
    cost_to_target,
    default_cost_model,
    marginal_cost,
    place_barriers,
    segment_start,
)
from .evaluate import (
    GAP_ABOVE_LEADERS,
    GAP_BELOW_LAGGARDS,
    GAP_BETWEEN,
    CostPoint,
    RoadmapData,
    RoadmapMarker,
    RoadmapScenario,
    TargetEvaluation,
    build_roadmap,
    evaluate_target,
)
from .gate import (
    POLICIES,
    POLICY_FLOOR,
    POLICY_NO_DECLINE,
    PROJECT_PATH,
    GateResult,
    GateViolation,
    gate_check,
)

__all__ = [
    "BarrierCategory",
    "BenefitCurve",
    "Breakpoints",
    "CostModel",
    "CostPoint",
    "DEFAULT_CATEGORY_CYCLE",
    "DEFAULT_FIXED_COSTS",
    "DEFAULT_RATIONALES",
    "GAP_ABOVE_LEADERS",
    "GAP_BELOW_LAGGARDS",
    "GAP_BETWEEN",
    "GateResult",
    "GateViolation",
    "InvestmentBarrier",
    "POLICIES",
    "POLICY_FLOOR",
    "POLICY_NO_DECLINE",
    "PROJECT_PATH",
    "RoadmapData",
    "RoadmapMarker",
    "RoadmapScenario",
    "TargetEvaluation",
    "benefit_slope",
    "benefit_value",
    "build_roadmap",
    "cost_to_target",
    "default_cost_model",
    "derive_breakpoints",
    "evaluate_target",
    "gate_check",
    "marginal_cost",
    "max_slope_ratio",
    "place_barriers",
    "segment_start",
]
