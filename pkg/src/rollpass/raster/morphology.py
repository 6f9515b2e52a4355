import numpy as np
from scipy import ndimage

from rollpass.raster.raster import Bits, Raster


def disk_kernel(k: int) -> Bits:
    """Disk structuring element of diameter `k` pixels: offsets (dy, dx) with dx^2 + dy^2 <= (k/2)^2."""
    if k < 1:
        raise ValueError(f"kernel diameter must be >= 1, got {k}")
    half = k // 2
    offsets = np.arange(-half, half + 1)
    dy, dx = np.meshgrid(offsets, offsets, indexing="ij")
    return dx**2 + dy**2 <= (k / 2) ** 2


def dilate(raster: Raster, k: int) -> Raster:
    """Dilation by a disk of diameter `k`. Pixels pushed past the frame are dropped."""
    if raster.is_empty:
        return raster
    grown = ndimage.binary_dilation(raster.bits, structure=disk_kernel(k), border_value=0)
    return raster.with_bits(grown)
