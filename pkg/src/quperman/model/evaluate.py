"""What-if target evaluation and roadmap assembly.

A scenario bundles the current and target health levels with the curve,
cost model, optional gate, and optional benchmark context. Evaluation
composes the other operations and adds the two positioning signals: the
target's percentile inside the benchmark corpus (when raw corpus scores
are available) and a gap note placing the target below the Laggards
(p10), between, or above the Leaders (p90).

The roadmap is the plot-ready form: a dense benefit series over the
whole scale, a marginal-cost series over [current, 10] with a
green/yellow/red band per point (thirds of its escalation segment), and
one marker per notable level.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..benchmark import BenchmarkDistribution, nearest_rank, percentile_of
from ..errors import DomainError, UnsupportedDirectionError
from .benefit import BenefitCurve, Breakpoints, benefit_value, derive_breakpoints
from .cost import CostModel, InvestmentBarrier, cost_to_target, marginal_cost, segment_start
from .gate import POLICIES, POLICY_FLOOR, POLICY_NO_DECLINE

GAP_BELOW_LAGGARDS = "belowLaggards"
GAP_BETWEEN = "between"
GAP_ABOVE_LEADERS = "aboveLeaders"

BENEFIT_SAMPLES = 201  # grid points across [1, 10]

BAND_EASE = "green"
BAND_RISING = "yellow"
BAND_STEEP = "red"


@dataclass(frozen=True)
class RoadmapScenario:
    project_id: str
    current_level: float
    target_level: float
    curve: BenefitCurve
    cost_model: CostModel
    gate_policy: str | None = None
    gate_floor: float | None = None
    benchmark: BenchmarkDistribution | None = None
    benchmark_scores: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if not 1.0 <= self.current_level <= 10.0:
            raise DomainError(f"current level must lie in [1, 10], got {self.current_level}")
        if not 1.0 <= self.target_level <= 10.0:
            raise DomainError(f"target level must lie in [1, 10], got {self.target_level}")
        if self.gate_policy is not None and self.gate_policy not in POLICIES:
            raise DomainError(f"unknown gate policy: {self.gate_policy}")

    def distribution(self) -> BenchmarkDistribution | None:
        """Benchmark summary: recomputed from raw scores when given,
        otherwise whatever summary the scenario carries."""
        if self.benchmark_scores:
            scores = sorted(self.benchmark_scores)
            return BenchmarkDistribution(
                filter=self.benchmark.filter if self.benchmark else (),
                n=len(scores),
                p10=nearest_rank(scores, 10),
                p50=nearest_rank(scores, 50),
                p90=nearest_rank(scores, 90),
            )
        return self.benchmark


@dataclass(frozen=True)
class TargetEvaluation:
    project_id: str
    current_level: float
    target_level: float
    benefit_delta: float
    total_cost: float
    barriers_crossed: tuple[InvestmentBarrier, ...]
    escalation_zone: tuple[float, float]
    target_percentile: float | None
    leaders_gap_note: str | None


@dataclass(frozen=True)
class RoadmapMarker:
    kind: str
    position: float
    label: str


@dataclass(frozen=True)
class CostPoint:
    level: float
    marginal: float
    band: str


@dataclass(frozen=True)
class RoadmapData:
    benefit_points: tuple[tuple[float, float], ...]
    cost_points: tuple[CostPoint, ...]
    breakpoints: Breakpoints
    markers: tuple[RoadmapMarker, ...]


def _escalation_zone(scenario: RoadmapScenario) -> tuple[float, float]:
    ahead = [
        b.position
        for b in scenario.cost_model.barrier_plan
        if b.position > scenario.current_level
    ]
    return (scenario.current_level, min(ahead) if ahead else 10.0)


def evaluate_target(scenario: RoadmapScenario) -> TargetEvaluation:
    if scenario.target_level < scenario.current_level:
        raise UnsupportedDirectionError(
            f"target {scenario.target_level} is below current level "
            f"{scenario.current_level}; only improvement targets are supported"
        )
    benefit_delta = benefit_value(scenario.curve, scenario.target_level) - benefit_value(
        scenario.curve, scenario.current_level
    )
    total_cost, crossed = cost_to_target(
        scenario.cost_model, scenario.current_level, scenario.target_level
    )

    target_percentile = None
    if scenario.benchmark_scores:
        target_percentile = percentile_of(scenario.target_level, scenario.benchmark_scores)

    gap_note = None
    dist = scenario.distribution()
    if dist is not None:
        if scenario.target_level > dist.p90:
            gap_note = GAP_ABOVE_LEADERS
        elif scenario.target_level < dist.p10:
            gap_note = GAP_BELOW_LAGGARDS
        else:
            gap_note = GAP_BETWEEN

    return TargetEvaluation(
        project_id=scenario.project_id,
        current_level=scenario.current_level,
        target_level=scenario.target_level,
        benefit_delta=benefit_delta,
        total_cost=total_cost,
        barriers_crossed=crossed,
        escalation_zone=_escalation_zone(scenario),
        target_percentile=target_percentile,
        leaders_gap_note=gap_note,
    )


def _band_for(model: CostModel, h: float) -> str:
    """Thirds of the escalation segment containing h."""
    start = segment_start(model, h)
    ahead = [b.position for b in model.barrier_plan if b.position > h]
    end = min(ahead) if ahead else 10.0
    if end <= start:
        return BAND_EASE
    fraction = (h - start) / (end - start)
    if fraction < 1.0 / 3.0:
        return BAND_EASE
    if fraction < 2.0 / 3.0:
        return BAND_RISING
    return BAND_STEEP


def build_roadmap(scenario: RoadmapScenario) -> RoadmapData:
    curve = scenario.curve
    model = scenario.cost_model

    benefit_points = tuple(
        (h, benefit_value(curve, h))
        for h in (1.0 + 9.0 * i / (BENEFIT_SAMPLES - 1) for i in range(BENEFIT_SAMPLES))
    )

    cost_points: list[CostPoint] = []
    lo = scenario.current_level
    if lo < 10.0:
        for i in range(BENEFIT_SAMPLES):
            h = lo + (10.0 - lo) * i / (BENEFIT_SAMPLES - 1)
            cost_points.append(CostPoint(h, marginal_cost(model, h), _band_for(model, h)))
    else:
        cost_points.append(CostPoint(10.0, marginal_cost(model, 10.0), BAND_EASE))

    breakpoints = derive_breakpoints(curve)

    markers: list[RoadmapMarker] = [
        RoadmapMarker("current", scenario.current_level, "current health"),
        RoadmapMarker("target", scenario.target_level, "candidate target"),
        RoadmapMarker("costSpiralTrigger", breakpoints.cost_spiral_trigger, "cost spiral trigger"),
        RoadmapMarker("valueCascadePoint", breakpoints.value_cascade_point, "value cascade point"),
    ]
    for barrier in model.barrier_plan:
        markers.append(
            RoadmapMarker("barrier", barrier.position, barrier.category.value)
        )
    if scenario.gate_policy == POLICY_FLOOR and scenario.gate_floor is not None:
        markers.append(RoadmapMarker("gate", scenario.gate_floor, "quality gate floor"))
    elif scenario.gate_policy == POLICY_NO_DECLINE:
        markers.append(RoadmapMarker("gate", scenario.current_level, "no-decline gate"))
    dist = scenario.distribution()
    if dist is not None:
        markers.append(RoadmapMarker("laggards", dist.p10, "Laggards (p10)"))
        markers.append(RoadmapMarker("leaders", dist.p90, "Leaders (p90)"))

    return RoadmapData(
        benefit_points=benefit_points,
        cost_points=tuple(cost_points),
        breakpoints=breakpoints,
        markers=tuple(markers),
    )
