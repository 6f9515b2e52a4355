from rollpass.raster.config import RasterConfig
from rollpass.raster.metrics import area_error, jaccard
from rollpass.raster.morphology import dilate, disk_kernel
from rollpass.raster.pbm import decode_pbm, encode_pbm, read_pbm, write_pbm
from rollpass.raster.raster import (
    Raster,
    area_px,
    complement,
    difference,
    intersect,
    is_subset,
    pixel_centers,
    union,
)
from rollpass.raster.rasterize import (
    ScenarioRaster,
    closing_distance,
    rasterize_disk,
    rasterize_rolls,
    rasterize_scenario,
)
from rollpass.raster.transforms import augment, flip_h, flip_v, rotate_quarter, rotate_small

__all__ = [
    "Raster",
    "RasterConfig",
    "ScenarioRaster",
    "area_error",
    "area_px",
    "augment",
    "closing_distance",
    "complement",
    "decode_pbm",
    "difference",
    "dilate",
    "disk_kernel",
    "encode_pbm",
    "flip_h",
    "flip_v",
    "intersect",
    "is_subset",
    "jaccard",
    "pixel_centers",
    "rasterize_disk",
    "rasterize_rolls",
    "rasterize_scenario",
    "read_pbm",
    "rotate_quarter",
    "rotate_small",
    "union",
    "write_pbm",
]
