from dataclasses import dataclass
from typing import final

import numpy as np
from loguru import logger

from rollpass.geometry.curves import FloatArray
from rollpass.geometry.profile import Disk, RollProfile, Scenario, disk_columns, place_scenario
from rollpass.raster.config import RasterConfig
from rollpass.raster.raster import Raster, pixel_centers
from rollpass.shared.errors import OutOfFrame

# Added to each closing distance so the opened rolls clear the inlet despite rounding
_CLEARANCE_MM = 1e-9


@final
@dataclass(frozen=True)
class ScenarioRaster:
    inlet: Raster
    over_mask: Raster
    under_mask: Raster
    closure: float

    @property
    def gap(self) -> Raster:
        """Pixels belonging to neither roll."""
        return self.inlet.with_bits(~(self.over_mask.bits | self.under_mask.bits))


def rasterize_disk(disk: Disk, config: RasterConfig = RasterConfig()) -> Raster:
    """
    Pixels whose centers lie inside the disk.

    Raises OutOfFrame when any part of the disk falls outside the window; a clipped inlet would
    silently lose material.
    """
    if (
        abs(disk.center.x) + disk.radius > config.half_width_mm
        or abs(disk.center.y) + disk.radius > config.half_height_mm
    ):
        raise OutOfFrame(
            f"disk of radius {disk.radius} mm at ({disk.center.x}, {disk.center.y}) exceeds the "
            f"{2 * config.half_width_mm} x {2 * config.half_height_mm} mm window"
        )
    xs, ys = pixel_centers(config)
    inside = (xs[None, :] - disk.center.x) ** 2 + (ys[:, None] - disk.center.y) ** 2 <= disk.radius**2
    return Raster(inside, config.resolution_mm)


def rasterize_rolls(
    profile: RollProfile,
    config: RasterConfig = RasterConfig(),
    over_offset: float = 0.0,
    under_offset: float = 0.0,
) -> tuple[Raster, Raster]:
    """
    Roll material inside the window: the over roll fills y >= over(x) + over_offset, the under roll
    y <= under(x) - under_offset, on columns within the roll span. Where the two overlap the pixel
    goes to the over roll only.
    """
    xs, ys = pixel_centers(config)
    in_span = (xs >= profile.x_min) & (xs <= profile.x_max)
    over = np.zeros((config.height_px, config.width_px), dtype=np.bool_)
    under = np.zeros_like(over)
    if in_span.any():
        columns = xs[in_span]
        over[:, in_span] = ys[:, None] >= profile.over(columns)[None, :] + over_offset
        under[:, in_span] = ys[:, None] <= profile.under(columns)[None, :] - under_offset
        under &= ~over
    return Raster(over, config.resolution_mm), Raster(under, config.resolution_mm)


def closing_distance(
    profile: RollProfile, disk: Disk, extra_xs: FloatArray | None = None
) -> float:
    """
    How far the rolls travel from the open position to the closed one. Both rolls move by the same
    amount: the smallest c at which raising the over roll and lowering the under roll by c puts the
    whole disk inside the gap, so at the open position the tighter roll touches the disk.

    Sampled on the disk columns plus `extra_xs` (pixel centers, so the rasterized inlet is cleared too).
    """
    xs, half_heights, _ = disk_columns(disk)
    if extra_xs is not None:
        inside = np.abs(extra_xs - disk.center.x) <= disk.radius
        extra = extra_xs[inside]
        xs = np.concatenate([xs, extra])
        half_heights = np.concatenate(
            [half_heights, np.sqrt(np.maximum(disk.radius**2 - (extra - disk.center.x) ** 2, 0.0))]
        )
    in_span = (xs >= profile.x_min) & (xs <= profile.x_max)
    if not in_span.any():
        return 0.0
    columns = xs[in_span]
    top = disk.center.y + half_heights[in_span]
    bottom = disk.center.y - half_heights[in_span]
    over_travel = float((top - profile.over(columns)).max())
    under_travel = float((profile.under(columns) - bottom).max())
    return max(over_travel, under_travel, 0.0) + _CLEARANCE_MM


def clipped_roll_columns(
    profile: RollProfile, disk: Disk, travel: float, config: RasterConfig = RasterConfig()
) -> int:
    """Disk columns inside the roll span where either roll surface, opened by `travel`, lies outside the window."""
    xs, _, _ = disk_columns(disk)
    columns = xs[(xs >= profile.x_min) & (xs <= profile.x_max)]
    if columns.size == 0:
        return 0
    outside = (profile.over(columns) + travel > config.half_height_mm) | (
        profile.under(columns) - travel < -config.half_height_mm
    )
    return int(outside.sum())


def rasterize_scenario(
    scenario: Scenario, closure: float = 1.0, config: RasterConfig = RasterConfig()
) -> ScenarioRaster:
    """
    Inlet disk and both roll masks with the rolls at `closure` in [0, 1]: 0 is the open position
    (the rolls just clear the inlet), 1 the closed position. Intermediate closures interpolate the
    travel linearly, so the gap shrinks as closure grows.
    """
    if not 0.0 <= closure <= 1.0:
        raise ValueError(f"closure must lie in [0, 1], got {closure}")
    placed = place_scenario(scenario.profile)
    disk = scenario.disk
    inlet = rasterize_disk(disk, config)
    xs, _ = pixel_centers(config)
    travel = (1 - closure) * closing_distance(placed, disk, xs)
    if clipped := clipped_roll_columns(placed, disk, travel, config):
        logger.debug(
            f"stream {scenario.stream_id}: rolls leave the window on {clipped} disk columns at closure {closure}"
        )
    over_mask, under_mask = rasterize_rolls(placed, config, travel, travel)
    return ScenarioRaster(inlet, over_mask, under_mask, closure)
