import math

import numpy as np

from rollpass.geometry.curves import ProfileCurve
from rollpass.geometry.profile import RollProfile


def create_flat_profile(
    gap: float = 8.0, width: float = 100.0, x0: float = 0.0, centre_y: float = 0.0, knots: int = 5
) -> RollProfile:
    """Parallel horizontal rolls `gap` mm apart over [x0, x0 + width]."""
    xs = np.linspace(x0, x0 + width, knots)
    return RollProfile(
        ProfileCurve(xs, np.full(knots, centre_y + gap / 2)),
        ProfileCurve(xs, np.full(knots, centre_y - gap / 2)),
        width,
    )


def create_wavy_profile(width: float = 120.0, knots: int = 25) -> RollProfile:
    xs = np.linspace(-width / 2, width / 2, knots)
    phase = np.linspace(0.0, 2 * math.pi, knots)
    return RollProfile(
        ProfileCurve(xs, 15.0 + 5.0 * np.sin(phase)),
        ProfileCurve(xs, -15.0 + 4.0 * np.cos(phase)),
        width,
    )


def band_area_in_disk(radius: float, half_gap: float) -> float:
    """Area of a centred disk lying within |y| < half_gap (closed form)."""
    if half_gap >= radius:
        return math.pi * radius**2
    return 2 * (half_gap * math.sqrt(radius**2 - half_gap**2) + radius**2 * math.asin(half_gap / radius))
