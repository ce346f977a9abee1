"""Escalating improvement cost with investment barriers.

Marginal cost grows exponentially with distance from the segment start:

    m(x) = c0 * gamma^(x - s)

where s is the current level at first, then the position of the last
barrier crossed; crossing a barrier pays its fixed cost and resets the
escalation, so the pattern repeats from the new level. The exact cost of
moving over [a, b] inside one segment is the integral of m:

    segment_cost(a, b) = c0 / ln(gamma) * (gamma^(b - s) - gamma^(a - s))

Barriers carry one of seven categories. The default plan spaces them
equidistantly above the current level and cycles through the taxonomy
with a per-category default fixed cost; callers may instead supply any
explicit plan with strictly increasing positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ..errors import DomainError, ParameterError, UnsupportedDirectionError

# positions within 1e-9 of a boundary count as on it; keeps plans like
# current 4.0 with spacing 1.5 landing exactly on 10 despite float drift
POSITION_TOLERANCE = 1e-9


class BarrierCategory(Enum):
    TEST_ADEQUACY = "TestAdequacy"
    ARCHITECTURAL_CHANGE = "ArchitecturalChange"
    DEVELOPER_TRAINING = "DeveloperTraining"
    KNOWLEDGE_RECOVERY = "KnowledgeRecovery"
    DOMAIN_KNOWLEDGE = "DomainKnowledge"
    REGULATORY_ASPECTS = "RegulatoryAspects"
    MAJOR_CODE_SMELLS = "MajorCodeSmells"


DEFAULT_FIXED_COSTS: dict[BarrierCategory, float] = {
    BarrierCategory.ARCHITECTURAL_CHANGE: 100.0,
    BarrierCategory.REGULATORY_ASPECTS: 80.0,
    BarrierCategory.KNOWLEDGE_RECOVERY: 60.0,
    BarrierCategory.TEST_ADEQUACY: 50.0,
    BarrierCategory.MAJOR_CODE_SMELLS: 50.0,
    BarrierCategory.DEVELOPER_TRAINING: 40.0,
    BarrierCategory.DOMAIN_KNOWLEDGE: 40.0,
}

# order in which categories are assigned to successive default barriers
DEFAULT_CATEGORY_CYCLE: tuple[BarrierCategory, ...] = (
    BarrierCategory.TEST_ADEQUACY,
    BarrierCategory.ARCHITECTURAL_CHANGE,
    BarrierCategory.DEVELOPER_TRAINING,
    BarrierCategory.KNOWLEDGE_RECOVERY,
    BarrierCategory.DOMAIN_KNOWLEDGE,
    BarrierCategory.REGULATORY_ASPECTS,
    BarrierCategory.MAJOR_CODE_SMELLS,
)

DEFAULT_RATIONALES: dict[BarrierCategory, str] = {
    BarrierCategory.TEST_ADEQUACY: "build a safety net of tests before deeper changes",
    BarrierCategory.ARCHITECTURAL_CHANGE: "restructure module boundaries to unlock further gains",
    BarrierCategory.DEVELOPER_TRAINING: "level up the team on the practices the next stage needs",
    BarrierCategory.KNOWLEDGE_RECOVERY: "recover design knowledge lost with past maintainers",
    BarrierCategory.DOMAIN_KNOWLEDGE: "close domain understanding gaps before touching core rules",
    BarrierCategory.REGULATORY_ASPECTS: "clear compliance constraints before altering regulated code",
    BarrierCategory.MAJOR_CODE_SMELLS: "pay down the worst smells blocking routine changes",
}


@dataclass(frozen=True)
class InvestmentBarrier:
    category: BarrierCategory
    position: float
    fixed_cost: float
    rationale: str = ""

    def __post_init__(self) -> None:
        if not 1.0 < self.position <= 10.0 + POSITION_TOLERANCE:
            raise ParameterError(f"barrier position must lie in (1, 10], got {self.position}")
        if self.fixed_cost < 0:
            raise ParameterError(f"barrier fixed cost must be >= 0, got {self.fixed_cost}")


def place_barriers(
    current_level: float,
    spacing: float,
    category_plan: list[BarrierCategory] | None = None,
    fixed_costs: dict[BarrierCategory, float] | None = None,
) -> list[InvestmentBarrier]:
    """Equidistant barriers above the current level, positions
    current + i*spacing for i = 1, 2, ... up to and including 10."""
    if not spacing > 0:
        raise ParameterError(f"barrier spacing must be positive, got {spacing}")
    cycle = tuple(category_plan) if category_plan else DEFAULT_CATEGORY_CYCLE
    costs = dict(DEFAULT_FIXED_COSTS)
    if fixed_costs:
        costs.update(fixed_costs)

    barriers: list[InvestmentBarrier] = []
    i = 1
    while True:
        position = current_level + i * spacing
        if position > 10.0 + POSITION_TOLERANCE:
            break
        category = cycle[(i - 1) % len(cycle)]
        barriers.append(
            InvestmentBarrier(
                category=category,
                position=min(position, 10.0),
                fixed_cost=costs[category],
                rationale=DEFAULT_RATIONALES[category],
            )
        )
        i += 1
    return barriers


@dataclass(frozen=True)
class CostModel:
    current_level: float
    base_marginal_cost: float = 10.0
    escalation: float = 2.0
    barrier_spacing: float = 1.5
    barrier_plan: tuple[InvestmentBarrier, ...] = ()

    def __post_init__(self) -> None:
        if not 1.0 <= self.current_level <= 10.0:
            raise ParameterError(
                f"current level must lie in [1, 10], got {self.current_level}"
            )
        if not self.base_marginal_cost > 0:
            raise ParameterError(
                f"base marginal cost must be positive, got {self.base_marginal_cost}"
            )
        if not self.escalation > 1:
            raise ParameterError(f"escalation must exceed 1, got {self.escalation}")
        if not self.barrier_spacing > 0:
            raise ParameterError(f"barrier spacing must be positive, got {self.barrier_spacing}")
        positions = [b.position for b in self.barrier_plan]
        if any(q <= p for p, q in zip(positions, positions[1:])):
            raise ParameterError("barrier positions must be strictly increasing")
        if positions and positions[0] <= self.current_level:
            raise ParameterError(
                f"barriers must sit above the current level {self.current_level}"
            )


def default_cost_model(
    current_level: float,
    base_marginal_cost: float = 10.0,
    escalation: float = 2.0,
    barrier_spacing: float = 1.5,
    category_plan: list[BarrierCategory] | None = None,
    fixed_costs: dict[BarrierCategory, float] | None = None,
) -> CostModel:
    """CostModel with the equidistant default barrier plan filled in."""
    return CostModel(
        current_level=current_level,
        base_marginal_cost=base_marginal_cost,
        escalation=escalation,
        barrier_spacing=barrier_spacing,
        barrier_plan=tuple(
            place_barriers(current_level, barrier_spacing, category_plan, fixed_costs)
        ),
    )


def _segment_cost(model: CostModel, start: float, a: float, b: float) -> float:
    gamma = model.escalation
    scale = model.base_marginal_cost / math.log(gamma)
    return scale * (gamma ** (b - start) - gamma ** (a - start))


def marginal_cost(model: CostModel, h: float) -> float:
    """Instantaneous cost per health point at level h."""
    start = segment_start(model, h)
    return model.base_marginal_cost * model.escalation ** (h - start)


def segment_start(model: CostModel, h: float) -> float:
    """Escalation origin at level h: the last barrier at or below h,
    else the model's current level."""
    start = model.current_level
    for barrier in model.barrier_plan:
        if barrier.position <= h:
            start = barrier.position
    return start


def cost_to_target(
    model: CostModel, from_level: float, to_level: float
) -> tuple[float, tuple[InvestmentBarrier, ...]]:
    """Total effort to move from one health level to a higher one:
    closed-form segment integrals plus the fixed cost of every barrier
    whose position lies in (from, to]."""
    if not 1.0 <= from_level <= 10.0 + POSITION_TOLERANCE:
        raise DomainError(f"from level must lie in [1, 10], got {from_level}")
    if not 1.0 <= to_level <= 10.0 + POSITION_TOLERANCE:
        raise DomainError(f"to level must lie in [1, 10], got {to_level}")
    if to_level < from_level:
        raise UnsupportedDirectionError(
            f"cost is defined for improvement only: target {to_level} "
            f"is below start {from_level}"
        )
    if from_level < model.current_level - POSITION_TOLERANCE:
        raise DomainError(
            f"from level {from_level} lies below the model's current level "
            f"{model.current_level}"
        )

    crossed = tuple(b for b in model.barrier_plan if from_level < b.position <= to_level)
    total = 0.0
    position = from_level
    start = segment_start(model, from_level)
    for barrier in crossed:
        total += _segment_cost(model, start, position, barrier.position)
        total += barrier.fixed_cost
        position = barrier.position
        start = barrier.position
    total += _segment_cost(model, start, position, to_level)
    return total, crossed
