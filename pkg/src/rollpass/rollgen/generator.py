import math
from dataclasses import dataclass
from typing import final

import numpy as np
from loguru import logger

from rollpass.geometry.curves import FloatArray, Point2, ProfileCurve
from rollpass.geometry.profile import (
    Disk,
    RollProfile,
    Scenario,
    gap_area,
    min_vertical_gap,
    penetration_area,
    place_scenario,
)
from rollpass.rollgen.config import RollGenConfig
from rollpass.shared.errors import GenerationExhausted, NoFeasibleDiameter
from rollpass.shared.rng import RngStream

DEFAULT_CONFIG = RollGenConfig()


@final
@dataclass(frozen=True)
class KnotVectors:
    """Normalized knot vectors, before fitting and metric scaling."""

    xs: FloatArray
    over_ys: FloatArray
    under_ys: FloatArray


def _draw_ys(
    rng: RngStream, xs: FloatArray, y_range: tuple[float, float], config: RollGenConfig
) -> FloatArray:
    match config.y_sampler:
        case "iid":
            return rng.uniform(*y_range, len(xs))
        case "polyline":
            control_xs = np.linspace(-1.0, 1.0, config.y_control_points)
            return np.interp(xs, control_xs, rng.uniform(*y_range, config.y_control_points))


def draw_knot_vectors(rng: RngStream, config: RollGenConfig = DEFAULT_CONFIG) -> KnotVectors:
    """Sorted x knots, then the over y values, then the under y values, in that draw order."""
    n = config.knot_count
    xs = np.sort(rng.uniform(-1.0, 1.0, n))
    # Push near-ties apart so x is strictly increasing: x_i = max(x_i, x_{i-1} + eps), propagated
    offsets = config.tie_epsilon * np.arange(n)
    xs = np.maximum.accumulate(xs - offsets) + offsets

    over_ys = _draw_ys(rng, xs, config.over_y_range, config)
    under_ys = _draw_ys(rng, xs, config.under_y_range, config)
    under_ys = np.minimum(under_ys, over_ys - config.separation)
    return KnotVectors(xs, over_ys, under_ys)


def generate_profile(rng: RngStream, config: RollGenConfig = DEFAULT_CONFIG) -> RollProfile:
    """
    Draw a random roll pair: sorted x knots (no undercuts), over and under y knots kept apart,
    natural cubic splines scaled uniformly to a random metric width, and the over roll lifted if
    the metric gap falls under the minimum. Always succeeds.
    """
    knots = draw_knot_vectors(rng, config)
    width = rng.uniform_scalar(*config.width_range_mm)

    scale = width / (knots.xs[-1] - knots.xs[0])
    xs = (knots.xs - knots.xs[0]) * scale
    xs[-1] = width
    profile = RollProfile(
        ProfileCurve(xs, knots.over_ys * scale),
        ProfileCurve(xs, knots.under_ys * scale),
        width,
    )

    if (gap := min_vertical_gap(profile)) < config.min_gap_mm:
        profile = profile.with_over_raised(config.min_gap_mm - gap)
    return profile


def penetration_ratio(placed: RollProfile, diameter: float) -> float:
    """Share of a centered disk of `diameter` covered by roll material; `placed` is in the disk frame."""
    disk = Disk(Point2(0.0, 0.0), diameter / 2)
    return penetration_area(placed, disk) / disk.area


def feasible_diameters(profile: RollProfile, config: RollGenConfig = DEFAULT_CONFIG) -> list[int]:
    """
    Diameters that fit the gap area (D <= 2 sqrt(A_rolls / pi)) and whose penetration ratio lies
    within the configured band.
    """
    bound = 2 * math.sqrt(gap_area(profile) / math.pi)
    placed = place_scenario(profile)
    low, high = config.penetration_ratio_range
    return [
        diameter
        for diameter in config.diameters_mm
        if diameter <= bound and low <= penetration_ratio(placed, diameter) <= high
    ]


def select_diameter(
    profile: RollProfile, rng: RngStream, config: RollGenConfig = DEFAULT_CONFIG
) -> int:
    """
    Uniform choice among the feasible diameters.

    Raises NoFeasibleDiameter when none survive; generate_scenario handles it by drawing a new
    profile rather than repairing this one.
    """
    survivors = feasible_diameters(profile, config)
    if not survivors:
        raise NoFeasibleDiameter("no diameter satisfies both the gap-area and penetration criteria")
    return survivors[rng.integer(0, len(survivors))]


def generate_scenario(rng: RngStream, config: RollGenConfig = DEFAULT_CONFIG) -> Scenario:
    """
    Regenerate profiles until one admits a diameter, then draw the temperature.

    Raises GenerationExhausted after `config.max_attempts` rejected profiles. That signals a
    generator or configuration bug and is left to the caller (the cli reports it as a runtime error).
    """
    for attempt in range(1, config.max_attempts + 1):
        profile = generate_profile(rng, config)
        try:
            diameter = select_diameter(profile, rng, config)
        except NoFeasibleDiameter:
            continue
        temperature = rng.uniform_scalar(*config.temperature_range_c)
        logger.debug(
            f"stream {rng.stream_id}: feasible profile after {attempt} attempt(s), "
            f"D={diameter} mm, width={profile.width:.2f} mm"
        )
        return Scenario(
            profile=profile,
            diameter=float(diameter),
            temperature=temperature,
            seed=rng.seed,
            stream_id=rng.stream_id,
        )
    raise GenerationExhausted(
        f"stream {rng.stream_id}: {config.max_attempts} profiles rejected without a feasible diameter"
    )
