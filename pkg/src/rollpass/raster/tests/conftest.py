import numpy as np

from rollpass.raster.config import RasterConfig
from rollpass.raster.raster import Raster


def create_block(row: int, col: int, height: int, width: int, config: RasterConfig = RasterConfig()) -> Raster:
    bits = np.zeros((config.height_px, config.width_px), dtype=np.bool_)
    bits[row : row + height, col : col + width] = True
    return Raster(bits, config.resolution_mm)


def create_random_raster(seed: int, density: float = 0.3, config: RasterConfig = RasterConfig()) -> Raster:
    rng = np.random.default_rng(seed)
    return Raster(rng.random((config.height_px, config.width_px)) < density, config.resolution_mm)


def create_centre_pixel(config: RasterConfig = RasterConfig()) -> Raster:
    return Raster.from_pixels([(config.height_px // 2, config.width_px // 2)], config)
