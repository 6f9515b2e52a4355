import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Self, final, overload

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.interpolate import CubicSpline

from rollpass.shared.errors import NonMonotonicKnots, OutOfSpan, TooFewKnots

type FloatArray = NDArray[np.float64]

MIN_KNOTS = 4
# Relative slack on the span check, so that rescaled or recentered knots still accept their own endpoints
_SPAN_TOLERANCE = 1e-9


@final
@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"Point2 coordinates must be finite, got ({self.x}, {self.y})")


def _readonly(values: ArrayLike) -> FloatArray:
    array = np.array(values, dtype=np.float64)
    array.flags.writeable = False
    return array


@final
@dataclass(frozen=True, eq=False)
class ProfileCurve:
    """
    A natural cubic interpolating spline y(x) through strictly increasing knots.

    Evaluation outside [x_first, x_last] raises OutOfSpan: roll surfaces are only defined across
    the roll width, and callers decide what "outside the roll" means.
    """

    xs: FloatArray
    ys: FloatArray
    _spline: CubicSpline = field(init=False, repr=False)

    def __post_init__(self):
        xs = _readonly(self.xs)
        ys = _readonly(self.ys)
        if xs.ndim != 1 or xs.shape != ys.shape:
            raise ValueError("knot x and y vectors must be one-dimensional and of equal length")
        if len(xs) < MIN_KNOTS:
            raise TooFewKnots(f"a profile curve needs at least {MIN_KNOTS} knots, got {len(xs)}")
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise ValueError("knot coordinates must be finite")
        if np.any(np.diff(xs) <= 0):
            raise NonMonotonicKnots("knot x values must be strictly increasing")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "_spline", CubicSpline(xs, ys, bc_type="natural"))

    @property
    def knots(self) -> tuple[Point2, ...]:
        return tuple(Point2(float(x), float(y)) for x, y in zip(self.xs, self.ys, strict=True))

    @property
    def x_first(self) -> float:
        return float(self.xs[0])

    @property
    def x_last(self) -> float:
        return float(self.xs[-1])

    @overload
    def __call__(self, x: float) -> float: ...
    @overload
    def __call__(self, x: FloatArray) -> FloatArray: ...
    def __call__(self, x: float | FloatArray) -> float | FloatArray:
        values = np.asarray(x, dtype=np.float64)
        slack = _SPAN_TOLERANCE * max(1.0, self.x_last - self.x_first)
        if values.size and (
            values.min() < self.x_first - slack or values.max() > self.x_last + slack
        ):
            raise OutOfSpan(
                f"curve defined on [{self.x_first}, {self.x_last}], evaluated on [{values.min()}, {values.max()}]"
            )
        result: FloatArray = self._spline(values)
        if np.ndim(x) == 0:
            return float(result)
        return result

    def shifted(self, dx: float, dy: float) -> Self:
        return type(self)(self.xs + dx, self.ys + dy)

    def scaled(self, factor: float) -> Self:
        return type(self)(self.xs * factor, self.ys * factor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProfileCurve):
            return NotImplemented
        return bool(np.array_equal(self.xs, other.xs) and np.array_equal(self.ys, other.ys))

    def __hash__(self) -> int:
        return hash((self.xs.tobytes(), self.ys.tobytes()))


def fit_profile_curve(knots: Sequence[Point2]) -> ProfileCurve:
    """
    Fit the interpolating curve through `knots`.

    Raises TooFewKnots (< 4 knots) and NonMonotonicKnots (any x_{i+1} <= x_i); both are caller
    errors and are not handled inside the package.
    """
    return ProfileCurve(
        np.array([k.x for k in knots], dtype=np.float64),
        np.array([k.y for k in knots], dtype=np.float64),
    )
