import math
from dataclasses import dataclass
from typing import Self, final

import numpy as np

from rollpass.geometry.curves import FloatArray, Point2, ProfileCurve
from rollpass.shared.constants import (
    DIAMETER_SET,
    DISK_COLUMNS,
    GAP_QUADRATURE_INTERVALS,
    GAP_SAMPLES,
)
from rollpass.utils.pydantic_ext import FrozenModel

MIN_GAP_MM = 4.0
WIDTH_RANGE_MM = (80.0, 200.0)
TEMPERATURE_RANGE_C = (900.0, 1100.0)
# Relative tolerance on "both curves share the roll span"
_SPAN_MATCH = 1e-9


class ProfileKnots(FrozenModel):
    """Explicit, seed-independent document form of a RollProfile."""

    over: list[tuple[float, float]]
    under: list[tuple[float, float]]
    width: float


@final
@dataclass(frozen=True, eq=False)
class RollProfile:
    """
    Tooling geometry of one stand: `over` is the lower boundary of the upper roll, `under` the
    upper boundary of the lower roll. Both curves span [x_min, x_min + width].

    Construction only enforces the shared span; the metric invariants (4 mm gap, width range) are
    checked by `invariant_violations`, because analytic test rolls routinely sit outside them.
    """

    over: ProfileCurve
    under: ProfileCurve
    width: float

    def __post_init__(self):
        slack = _SPAN_MATCH * max(1.0, self.width)
        if self.width <= 0:
            raise ValueError(f"roll width must be positive, got {self.width}")
        for curve in (self.over, self.under):
            if abs(curve.x_first - self.over.x_first) > slack or abs(
                curve.x_last - curve.x_first - self.width
            ) > slack:
                raise ValueError("over and under curves must share the roll span")

    @property
    def x_min(self) -> float:
        return self.over.x_first

    @property
    def x_max(self) -> float:
        return self.over.x_first + self.width

    def sample_xs(self, n: int = GAP_SAMPLES) -> FloatArray:
        return np.linspace(self.x_min, self.x_max, n)

    def gap_at(self, xs: FloatArray) -> FloatArray:
        return self.over(xs) - self.under(xs)

    def shifted(self, dx: float, dy: float) -> Self:
        return type(self)(self.over.shifted(dx, dy), self.under.shifted(dx, dy), self.width)

    def scaled(self, factor: float) -> Self:
        return type(self)(self.over.scaled(factor), self.under.scaled(factor), self.width * factor)

    def with_over_raised(self, dy: float) -> Self:
        return type(self)(self.over.shifted(0.0, dy), self.under, self.width)

    def invariant_violations(self) -> list[str]:
        violations: list[str] = []
        low, high = WIDTH_RANGE_MM
        if not (low <= self.width <= high):
            violations.append(f"width {self.width} mm outside [{low}, {high}]")
        if (gap := min_vertical_gap(self)) < MIN_GAP_MM - 1e-6:
            violations.append(f"minimum vertical gap {gap} mm below {MIN_GAP_MM}")
        return violations

    def to_knots(self) -> ProfileKnots:
        return ProfileKnots(
            over=[(p.x, p.y) for p in self.over.knots],
            under=[(p.x, p.y) for p in self.under.knots],
            width=self.width,
        )

    @classmethod
    def from_knots(cls, document: ProfileKnots) -> Self:
        return cls(
            ProfileCurve(
                np.array([x for x, _ in document.over]), np.array([y for _, y in document.over])
            ),
            ProfileCurve(
                np.array([x for x, _ in document.under]), np.array([y for _, y in document.under])
            ),
            document.width,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RollProfile):
            return NotImplemented
        return self.over == other.over and self.under == other.under and self.width == other.width

    def __hash__(self) -> int:
        return hash((self.over, self.under, self.width))


@final
@dataclass(frozen=True)
class Disk:
    center: Point2
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"disk radius must be positive, got {self.radius}")

    @property
    def area(self) -> float:
        return math.pi * self.radius**2


@final
@dataclass(frozen=True)
class Scenario:
    """One single-stand setup. Temperature is carried as metadata; no estimator reads it."""

    profile: RollProfile
    diameter: float
    temperature: float
    seed: int
    stream_id: int = 0

    @property
    def disk(self) -> Disk:
        """The inlet disk in the placed frame: its center is the world origin."""
        return Disk(Point2(0.0, 0.0), self.diameter / 2)

    @property
    def placed_profile(self) -> RollProfile:
        return place_scenario(self.profile)

    def invariant_violations(self) -> list[str]:
        violations = self.profile.invariant_violations()
        if self.diameter not in DIAMETER_SET:
            violations.append(f"diameter {self.diameter} mm not in the diameter set")
        low, high = TEMPERATURE_RANGE_C
        if not (low <= self.temperature <= high):
            violations.append(f"temperature {self.temperature} C outside [{low}, {high}]")
        return violations


def gap_area(profile: RollProfile) -> float:
    """Area between the rolls, mm^2: composite midpoint rule, negative gaps count as zero."""
    step = profile.width / GAP_QUADRATURE_INTERVALS
    xs = profile.x_min + (np.arange(GAP_QUADRATURE_INTERVALS) + 0.5) * step
    return float(np.maximum(profile.gap_at(xs), 0.0).sum() * step)


def min_vertical_gap(profile: RollProfile) -> float:
    return float(profile.gap_at(profile.sample_xs()).min())


def disk_columns(disk: Disk, n: int = DISK_COLUMNS) -> tuple[FloatArray, FloatArray, float]:
    """
    Midpoint columns across the disk's bounding box: (column x, chord half-height, column width).
    """
    step = 2 * disk.radius / n
    xs = disk.center.x - disk.radius + (np.arange(n) + 0.5) * step
    half_heights = np.sqrt(np.maximum(disk.radius**2 - (xs - disk.center.x) ** 2, 0.0))
    return xs, half_heights, step


def penetration_area(profile: RollProfile, disk: Disk) -> float:
    """
    Area of `disk` lying outside the open gap {under(x) < y < over(x)}, with the rolls at their
    closed position. Columns beyond the roll span are unconstrained and contribute nothing.

    Each column's chord is intersected with the gap interval exactly; the column sampling has the
    density of a 2000x2000 grid over the disk's bounding box.
    """
    xs, half_heights, step = disk_columns(disk)
    in_span = (xs >= profile.x_min) & (xs <= profile.x_max)
    if not in_span.any():
        return 0.0
    columns = xs[in_span]
    chord_low = disk.center.y - half_heights[in_span]
    chord_high = disk.center.y + half_heights[in_span]
    overlap = np.maximum(
        np.minimum(chord_high, profile.over(columns)) - np.maximum(chord_low, profile.under(columns)),
        0.0,
    )
    outside = (chord_high - chord_low) - overlap
    return float(outside.sum() * step)


def place_scenario(profile: RollProfile) -> RollProfile:
    """
    Move the rolls into the inlet's frame: the disk center is the origin, the roll span becomes
    [-width/2, width/2], and the extreme-midline (min over + max under) / 2 passes through y = 0.
    """
    dx = -(profile.x_min + profile.width / 2)
    xs = profile.sample_xs()
    dy = -(float(profile.over(xs).min()) + float(profile.under(xs).max())) / 2
    return profile.shifted(dx, dy)
