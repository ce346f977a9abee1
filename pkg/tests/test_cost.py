"""Escalating cost integrals, barrier crossing, and default barrier plans.

The closed-form segment cost is checked against scipy numerical
integration; barrier crossing is checked against brute-force enumeration.
"""

from __future__ import annotations

import math
import random
import time

import pytest
from scipy.integrate import quad

from quperman.errors import DomainError, ParameterError, UnsupportedDirectionError
from quperman.model.cost import (
    DEFAULT_CATEGORY_CYCLE,
    DEFAULT_FIXED_COSTS,
    BarrierCategory,
    CostModel,
    InvestmentBarrier,
    cost_to_target,
    default_cost_model,
    marginal_cost,
    place_barriers,
    segment_start,
)


def barrier(position, category=BarrierCategory.TEST_ADEQUACY, fixed_cost=50.0):
    return InvestmentBarrier(category=category, position=position, fixed_cost=fixed_cost)


# --- closed form vs numerical integration -----------------------------------

def test_closed_form_matches_quadrature_on_random_instances():
    rng = random.Random(20260816)
    start = time.perf_counter()
    for _ in range(100):
        h0 = rng.uniform(1.0, 9.0)
        gamma = rng.uniform(1.1, 4.0)
        c0 = rng.uniform(0.5, 50.0)
        a = rng.uniform(h0, 10.0)
        b = rng.uniform(a, 10.0)
        model = CostModel(current_level=h0, base_marginal_cost=c0, escalation=gamma)

        total, crossed = cost_to_target(model, a, b)
        numeric, _ = quad(lambda x: c0 * gamma ** (x - h0), a, b)

        assert crossed == ()
        if numeric == 0.0:
            assert total == pytest.approx(0.0, abs=1e-12)
        else:
            assert total == pytest.approx(numeric, rel=1e-6)
    assert time.perf_counter() - start < 5.0


def test_cost_is_additive_without_barriers():
    rng = random.Random(99)
    model = CostModel(current_level=2.0, base_marginal_cost=7.0, escalation=1.8)
    for _ in range(50):
        points = sorted(rng.uniform(2.0, 10.0) for _ in range(3))
        a, b, c = points
        whole, _ = cost_to_target(model, a, c)
        first, _ = cost_to_target(model, a, b)
        second, _ = cost_to_target(model, b, c)
        assert abs(whole - (first + second)) < 1e-9


def test_zero_width_move_is_free():
    model = default_cost_model(4.0)
    total, crossed = cost_to_target(model, 6.0, 6.0)
    assert total == 0.0
    assert crossed == ()


# --- barrier crossing -------------------------------------------------------

def test_crossing_uses_half_open_interval():
    model = CostModel(
        current_level=3.0,
        barrier_plan=(barrier(5.0, fixed_cost=80.0),),
    )
    # starting exactly on the barrier does not pay it again
    _, crossed = cost_to_target(model, 5.0, 6.0)
    assert crossed == ()
    # ending exactly on the barrier pays it
    _, crossed = cost_to_target(model, 4.0, 5.0)
    assert [b.position for b in crossed] == [5.0]


def test_crossed_barriers_match_enumeration_on_random_plans():
    rng = random.Random(424242)
    start = time.perf_counter()
    for _ in range(1000):
        current = rng.uniform(1.0, 9.0)
        positions = sorted({round(rng.uniform(current + 0.05, 10.0), 4) for _ in range(rng.randint(0, 6))})
        plan = tuple(
            barrier(p, DEFAULT_CATEGORY_CYCLE[i % 7], fixed_cost=10.0 * (i + 1))
            for i, p in enumerate(positions)
        )
        model = CostModel(current_level=current, barrier_plan=plan)
        a = rng.uniform(current, 10.0)
        b = rng.uniform(a, 10.0)

        expected = [bar for bar in plan if a < bar.position <= b]
        total, crossed = cost_to_target(model, a, b)
        assert list(crossed) == expected
        assert total >= sum(bar.fixed_cost for bar in expected)
    assert time.perf_counter() - start < 5.0


def test_each_barrier_resets_escalation():
    model = CostModel(
        current_level=1.0,
        base_marginal_cost=10.0,
        escalation=2.0,
        barrier_plan=(barrier(3.0, fixed_cost=0.0),),
    )
    # just past the barrier the marginal price drops back to the base
    assert marginal_cost(model, 3.0) == pytest.approx(10.0)
    assert marginal_cost(model, 2.999) == pytest.approx(10.0 * 2.0 ** 1.999, rel=1e-12)
    assert segment_start(model, 2.0) == 1.0
    assert segment_start(model, 3.0) == 3.0

    # total over the reset splits into two closed-form pieces
    total, crossed = cost_to_target(model, 1.0, 5.0)
    scale = 10.0 / math.log(2.0)
    expected = scale * (2.0 ** 2 - 1.0) + scale * (2.0 ** 2 - 1.0)
    assert total == pytest.approx(expected, abs=1e-9)
    assert len(crossed) == 1


def test_fixed_costs_are_added_once_per_crossing():
    model = CostModel(
        current_level=2.0,
        barrier_plan=(barrier(4.0, fixed_cost=25.0), barrier(6.0, fixed_cost=35.0)),
    )
    with_barriers, crossed = cost_to_target(model, 2.0, 7.0)
    free_model = CostModel(current_level=2.0)
    assert len(crossed) == 2
    # dropping the fixed costs leaves only integrals, which are smaller
    # than the unsegmented integral because each reset lowers the curve
    bare, _ = cost_to_target(free_model, 2.0, 7.0)
    assert with_barriers - 60.0 < bare


# --- default barrier plan ---------------------------------------------------

def test_default_plan_from_four():
    plan = place_barriers(4.0, 1.5)
    assert [(b.category, b.position, b.fixed_cost) for b in plan] == [
        (BarrierCategory.TEST_ADEQUACY, 5.5, 50.0),
        (BarrierCategory.ARCHITECTURAL_CHANGE, 7.0, 100.0),
        (BarrierCategory.DEVELOPER_TRAINING, 8.5, 40.0),
        (BarrierCategory.KNOWLEDGE_RECOVERY, 10.0, 60.0),
    ]
    assert all(b.rationale for b in plan)


def test_default_plan_cycles_past_seven_categories():
    plan = place_barriers(1.0, 1.0)
    assert len(plan) == 9
    assert [b.category for b in plan[:7]] == list(DEFAULT_CATEGORY_CYCLE)
    assert [b.category for b in plan[7:]] == [
        BarrierCategory.TEST_ADEQUACY,
        BarrierCategory.ARCHITECTURAL_CHANGE,
    ]


def test_default_plan_clamps_to_scale_top():
    plan = place_barriers(1.0, 0.9)
    assert len(plan) == 10
    assert all(b.position <= 10.0 for b in plan)
    assert plan[-1].position == 10.0


def test_default_plan_overrides():
    plan = place_barriers(
        8.0,
        1.0,
        category_plan=[BarrierCategory.REGULATORY_ASPECTS],
        fixed_costs={BarrierCategory.REGULATORY_ASPECTS: 5.0},
    )
    assert [(b.category, b.fixed_cost) for b in plan] == [
        (BarrierCategory.REGULATORY_ASPECTS, 5.0),
        (BarrierCategory.REGULATORY_ASPECTS, 5.0),
    ]


def test_default_fixed_costs_cover_every_category():
    assert set(DEFAULT_FIXED_COSTS) == set(BarrierCategory)
    assert set(DEFAULT_CATEGORY_CYCLE) == set(BarrierCategory)


def test_golden_journey_cost():
    # independently computed: quadrature over the three resets plus
    # 50 + 100 fixed = 202.75725490996388
    model = default_cost_model(4.0)
    total, crossed = cost_to_target(model, 4.0, 7.0)
    assert total == pytest.approx(202.75725490996388, abs=1e-9)
    assert [b.position for b in crossed] == [5.5, 7.0]


# --- validation -------------------------------------------------------------

def test_direction_and_domain_errors():
    model = default_cost_model(4.0)
    with pytest.raises(UnsupportedDirectionError):
        cost_to_target(model, 7.0, 5.0)
    with pytest.raises(DomainError):
        cost_to_target(model, 0.5, 5.0)
    with pytest.raises(DomainError):
        cost_to_target(model, 5.0, 10.5)
    with pytest.raises(DomainError):
        cost_to_target(model, 2.0, 5.0)  # below the model's current level


def test_model_parameter_validation():
    with pytest.raises(ParameterError):
        CostModel(current_level=0.0)
    with pytest.raises(ParameterError):
        CostModel(current_level=4.0, base_marginal_cost=0.0)
    with pytest.raises(ParameterError):
        CostModel(current_level=4.0, escalation=1.0)
    with pytest.raises(ParameterError):
        CostModel(current_level=4.0, barrier_spacing=0.0)
    with pytest.raises(ParameterError):
        CostModel(current_level=4.0, barrier_plan=(barrier(6.0), barrier(5.0)))
    with pytest.raises(ParameterError):
        CostModel(current_level=4.0, barrier_plan=(barrier(4.0),))
    with pytest.raises(ParameterError):
        InvestmentBarrier(BarrierCategory.TEST_ADEQUACY, 1.0, 50.0)
    with pytest.raises(ParameterError):
        InvestmentBarrier(BarrierCategory.TEST_ADEQUACY, 10.5, 50.0)
    with pytest.raises(ParameterError):
        InvestmentBarrier(BarrierCategory.TEST_ADEQUACY, 5.0, -1.0)
