from dataclasses import dataclass
from typing import Self, final

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rollpass.raster.config import RasterConfig
from rollpass.shared.errors import DimensionMismatch

type Bits = NDArray[np.bool_]


@final
@dataclass(frozen=True, eq=False)
class Raster:
    """
    A binary cross-section grid, row-major, row 0 at the top. Pixel (i, j) is sampled at its
    center, world ((j - (W-1)/2) * res, ((H-1)/2 - i) * res) mm, so the world origin sits on the
    grid center.
    """

    bits: Bits
    resolution_mm: float = RasterConfig().resolution_mm

    def __post_init__(self):
        bits = np.array(self.bits, dtype=np.bool_)
        if bits.ndim != 2:
            raise ValueError(f"raster bits must be two-dimensional, got shape {bits.shape}")
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    @classmethod
    def empty(cls, config: RasterConfig = RasterConfig()) -> Self:
        return cls(np.zeros((config.height_px, config.width_px), dtype=np.bool_), config.resolution_mm)

    @classmethod
    def full(cls, config: RasterConfig = RasterConfig()) -> Self:
        return cls(np.ones((config.height_px, config.width_px), dtype=np.bool_), config.resolution_mm)

    @classmethod
    def from_pixels(
        cls, pixels: ArrayLike, config: RasterConfig = RasterConfig()
    ) -> Self:
        """A raster with the listed (row, column) pixels set."""
        bits = np.zeros((config.height_px, config.width_px), dtype=np.bool_)
        coordinates = np.asarray(pixels, dtype=np.int64).reshape(-1, 2)
        bits[coordinates[:, 0], coordinates[:, 1]] = True
        return cls(bits, config.resolution_mm)

    @property
    def height_px(self) -> int:
        return int(self.bits.shape[0])

    @property
    def width_px(self) -> int:
        return int(self.bits.shape[1])

    @property
    def config(self) -> RasterConfig:
        return RasterConfig(
            width_px=self.width_px, height_px=self.height_px, resolution_mm=self.resolution_mm
        )

    @property
    def area_px(self) -> int:
        return int(np.count_nonzero(self.bits))

    @property
    def is_empty(self) -> bool:
        return not self.bits.any()

    def with_bits(self, bits: Bits) -> Self:
        return type(self)(bits, self.resolution_mm)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Raster):
            return NotImplemented
        return self.resolution_mm == other.resolution_mm and bool(
            np.array_equal(self.bits, other.bits)
        )

    def __hash__(self) -> int:
        return hash((self.bits.shape, self.bits.tobytes(), self.resolution_mm))

    def __repr__(self) -> str:
        return f"Raster({self.width_px}x{self.height_px} @ {self.resolution_mm} mm/px, area_px={self.area_px})"


def pixel_centers(config: RasterConfig) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """World x of every column and world y of every row, mm."""
    xs = (np.arange(config.width_px) - (config.width_px - 1) / 2) * config.resolution_mm
    ys = ((config.height_px - 1) / 2 - np.arange(config.height_px)) * config.resolution_mm
    return xs, ys


def check_same_shape(*rasters: Raster) -> None:
    """Raises DimensionMismatch; mixing grids is always a caller bug."""
    first = rasters[0]
    for other in rasters[1:]:
        if other.bits.shape != first.bits.shape or other.resolution_mm != first.resolution_mm:
            raise DimensionMismatch(f"{first!r} vs {other!r}")


def intersect(a: Raster, b: Raster) -> Raster:
    check_same_shape(a, b)
    return a.with_bits(a.bits & b.bits)


def union(a: Raster, b: Raster) -> Raster:
    check_same_shape(a, b)
    return a.with_bits(a.bits | b.bits)


def difference(a: Raster, b: Raster) -> Raster:
    """Symmetric difference: the pixels on which two shapes disagree."""
    check_same_shape(a, b)
    return a.with_bits(a.bits ^ b.bits)


def complement(a: Raster) -> Raster:
    return a.with_bits(~a.bits)


def area_px(a: Raster) -> int:
    return a.area_px


def is_subset(a: Raster, b: Raster) -> bool:
    check_same_shape(a, b)
    return not bool((a.bits & ~b.bits).any())
