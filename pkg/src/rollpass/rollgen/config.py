from typing import Literal, Self

from pydantic import Field, PositiveInt, model_validator

from rollpass.shared.constants import DIAMETER_SET
from rollpass.utils.pydantic_ext import FrozenModel


class RollGenConfig(FrozenModel):
    """
    Knobs of the procedural roll generator. The y and width distributions are not pinned down by
    the procedure itself.

    The defaults draw each roll as a smooth polyline through 4 uniform control values, with over y
    in [0.2, 0.3] and under y in [-0.3, -0.2]; rows between the extreme points of both rolls stay
    open across the whole raster window. `independent_knots()` gives per-knot uniform draws on the
    full unit box instead.
    """

    knot_count: PositiveInt = Field(default=101, ge=4)
    over_y_range: tuple[float, float] = (0.2, 0.3)
    under_y_range: tuple[float, float] = (-0.3, -0.2)
    # "polyline": each curve is a random polyline through `y_control_points` uniform draws, read off
    # at the knots. "iid": every knot draws its own value, and the interpolating spline spikes
    # wherever two x knots nearly coincide.
    y_sampler: Literal["polyline", "iid"] = "polyline"
    y_control_points: int = Field(default=4, ge=2)
    # Normalized pointwise separation between over and under knots
    separation: float = Field(default=0.4, ge=0)
    # Knot x values closer than this are pushed apart
    tie_epsilon: float = Field(default=1e-6, gt=0)
    width_range_mm: tuple[float, float] = (80.0, 200.0)
    min_gap_mm: float = Field(default=4.0, gt=0)
    diameters_mm: tuple[int, ...] = DIAMETER_SET
    penetration_ratio_range: tuple[float, float] = (0.40, 0.65)
    temperature_range_c: tuple[float, float] = (900.0, 1100.0)
    max_attempts: PositiveInt = 1000

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        for name in (
            "over_y_range",
            "under_y_range",
            "width_range_mm",
            "penetration_ratio_range",
            "temperature_range_c",
        ):
            low, high = getattr(self, name)  # pyright: ignore[reportAny]
            if low > high:
                raise ValueError(f"{name}: lower bound {low} exceeds upper bound {high}")
        if not self.diameters_mm:
            raise ValueError("diameters_mm must not be empty")
        return self

    @classmethod
    def independent_knots(cls) -> Self:
        """Every knot drawn on its own: over y uniform on [0.2, 1.0], under y on [-1.0, -0.2]."""
        return cls(over_y_range=(0.2, 1.0), under_y_range=(-1.0, -0.2), y_sampler="iid")
