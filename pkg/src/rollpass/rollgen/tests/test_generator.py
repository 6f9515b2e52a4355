import math

import numpy as np
import pytest

from rollpass.geometry.profile import gap_area, min_vertical_gap, place_scenario
from rollpass.geometry.tests.conftest import create_flat_profile
from rollpass.rollgen.config import RollGenConfig
from rollpass.rollgen.generator import (
    draw_knot_vectors,
    feasible_diameters,
    generate_profile,
    generate_scenario,
    penetration_ratio,
    select_diameter,
)
from rollpass.shared.errors import GenerationExhausted, NoFeasibleDiameter
from rollpass.shared.rng import RngStream


def _check_scenario_is_valid(config: RollGenConfig, seed: int, stream_id: int):
    scenario = generate_scenario(RngStream(seed, stream_id), config)
    profile = scenario.profile

    assert scenario.invariant_violations() == []
    assert np.all(np.diff(profile.over.xs) > 0)
    assert min_vertical_gap(profile) >= config.min_gap_mm - 1e-6
    assert 80.0 <= profile.width <= 200.0
    assert scenario.diameter <= 2 * math.sqrt(gap_area(profile) / math.pi)
    ratio = penetration_ratio(place_scenario(profile), scenario.diameter)
    assert 0.40 <= ratio <= 0.65


@pytest.mark.parametrize(
    "config", [RollGenConfig(), RollGenConfig.independent_knots()], ids=["polyline", "iid"]
)
def test_knot_vectors_increase_and_keep_apart(config: RollGenConfig):
    for stream_id in range(20):
        knots = draw_knot_vectors(RngStream(3, stream_id), config)

        assert len(knots.xs) == 101
        assert np.all(np.diff(knots.xs) > 0)
        assert np.all(knots.over_ys - knots.under_ys >= 0.4 - 1e-12)
        low, high = config.over_y_range
        assert np.all((knots.over_ys >= low) & (knots.over_ys <= high))
        assert np.all(knots.under_ys <= config.under_y_range[1])


def test_tied_draws_are_pushed_apart():
    config = RollGenConfig(knot_count=4, tie_epsilon=0.5)

    # with a huge epsilon every gap is widened to at least epsilon
    knots = draw_knot_vectors(RngStream(0), config)

    assert np.all(np.diff(knots.xs) >= 0.5 - 1e-12)


def test_generated_profile_is_valid_and_deterministic():
    for stream_id in range(25):
        profile = generate_profile(RngStream(42, stream_id))

        assert profile.invariant_violations() == []
        assert profile.x_min == 0.0
        assert profile.x_max == pytest.approx(profile.width)

    assert generate_profile(RngStream(42)) == generate_profile(RngStream(42))
    assert generate_profile(RngStream(42, 0)) != generate_profile(RngStream(42, 1))


def test_flat_rolls_admit_exactly_the_small_diameters():
    profile = create_flat_profile(gap=8.0, width=100.0)

    assert feasible_diameters(profile) == [20, 24, 28]
    assert penetration_ratio(place_scenario(profile), 30) == pytest.approx(0.665, abs=2e-3)


def test_select_diameter_draws_among_the_survivors():
    profile = create_flat_profile(gap=8.0, width=100.0)

    chosen = {select_diameter(profile, RngStream(5, i)) for i in range(60)}

    assert chosen == {20, 24, 28}


@pytest.mark.parametrize(
    "gap, width",
    [
        (200.0, 100.0),  # no disk reaches the rolls
        (1.0, 100.0),  # gap area 100 mm^2 only fits D <= 11.3 mm
    ],
)
def test_no_feasible_diameter(gap: float, width: float):
    with pytest.raises(NoFeasibleDiameter):
        select_diameter(create_flat_profile(gap=gap, width=width), RngStream(0))


def test_scenario_is_valid_and_deterministic():
    first = generate_scenario(RngStream(7))
    second = generate_scenario(RngStream(7))

    assert first == second
    assert first.seed == 7
    assert 900.0 <= first.temperature <= 1100.0
    _check_scenario_is_valid(RollGenConfig(), 7, 0)


def test_generation_gives_up_after_the_attempt_cap():
    impossible = RollGenConfig(diameters_mm=(400,), max_attempts=3)

    with pytest.raises(GenerationExhausted):
        generate_scenario(RngStream(1), impossible)


def test_scenarios_are_valid_sampled():
    config = RollGenConfig()
    for stream_id in range(30):
        _check_scenario_is_valid(config, 11, stream_id)


@pytest.mark.slow
def test_thousand_scenarios_are_valid():
    config = RollGenConfig()
    for stream_id in range(1000):
        _check_scenario_is_valid(config, 2024, stream_id)


def test_independent_knots_also_generate_valid_scenarios():
    config = RollGenConfig.independent_knots()
    for stream_id in range(10):
        _check_scenario_is_valid(config, 13, stream_id)
