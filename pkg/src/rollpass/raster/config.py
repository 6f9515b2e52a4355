from pydantic import Field, PositiveInt

from rollpass.shared.constants import DEFAULT_RASTER_SIZE_PX, DEFAULT_RESOLUTION_MM
from rollpass.utils.pydantic_ext import FrozenModel


class RasterConfig(FrozenModel):
    """Grid geometry shared by every channel. The origin is the grid center."""

    width_px: PositiveInt = DEFAULT_RASTER_SIZE_PX
    height_px: PositiveInt = DEFAULT_RASTER_SIZE_PX
    resolution_mm: float = Field(default=DEFAULT_RESOLUTION_MM, gt=0)

    @property
    def half_width_mm(self) -> float:
        return self.width_px * self.resolution_mm / 2

    @property
    def half_height_mm(self) -> float:
        return self.height_px * self.resolution_mm / 2
