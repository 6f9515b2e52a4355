import numpy as np
from scipy import ndimage

from rollpass.raster.raster import Raster
from rollpass.raster.sample import (
    Augmentation,
    FlipH,
    FlipV,
    Original,
    Rotation,
    Sample,
    SampleId,
)
from rollpass.shared.errors import DimensionMismatch
from rollpass.shared.rng import RngStream

MAX_SMALL_ROTATION_DEG = 10.0
AUGMENT_ROTATIONS = 4
AUGMENT_ANGLE_RANGE_DEG = (-3.0, 3.0)


def flip_h(raster: Raster) -> Raster:
    """Mirror about the vertical axis through the grid center."""
    return raster.with_bits(raster.bits[:, ::-1])


def flip_v(raster: Raster) -> Raster:
    """Mirror about the horizontal axis through the grid center."""
    return raster.with_bits(raster.bits[::-1, :])


def rotate_small(raster: Raster, angle_deg: float) -> Raster:
    """
    Nearest-neighbour rotation about the grid center, |angle| <= 10 degrees, in the same frame.
    Pixels rotated in from outside the frame copy the nearest edge pixel, so roll masks that reach
    the border keep reaching it.
    """
    if abs(angle_deg) > MAX_SMALL_ROTATION_DEG:
        raise ValueError(f"small rotations are limited to ±{MAX_SMALL_ROTATION_DEG}°, got {angle_deg}")
    if angle_deg == 0:
        return raster
    rotated = ndimage.rotate(
        raster.bits.astype(np.uint8), angle_deg, reshape=False, order=0, mode="nearest"
    )
    return raster.with_bits(rotated > 0)


def rotate_quarter(raster: Raster, degrees: int) -> Raster:
    """Exact counterclockwise rotation by a multiple of 90 degrees. Quarter turns need a square frame."""
    if degrees % 90 != 0:
        raise ValueError(f"quarter rotations take multiples of 90°, got {degrees}")
    quarters = (degrees // 90) % 4
    if quarters == 0:
        return raster
    if quarters % 2 == 1 and raster.width_px != raster.height_px:
        raise DimensionMismatch(f"cannot quarter-turn a non-square {raster!r}")
    return raster.with_bits(np.rot90(raster.bits, k=quarters))


def _suffix(augmentation: Augmentation, index: int) -> str:
    match augmentation:
        case FlipV():
            return "flipv"
        case FlipH():
            return "fliph"
        case Rotation():
            return f"rot{index}"
        case Original():
            return ""


def augment(sample: Sample, rng: RngStream) -> list[Sample]:
    """
    The sample itself, both mirrors and four small rotations, each applied identically to all four
    channels. The rotation angles are drawn from `rng` in one call.
    """
    angles = rng.uniform(*AUGMENT_ANGLE_RANGE_DEG, AUGMENT_ROTATIONS)
    variants: list[Sample] = [sample]

    def derived(augmentation: Augmentation, index: int = 0) -> Sample:
        meta = sample.meta.model_copy(
            update={
                "sample_id": SampleId(f"{sample.sample_id}-{_suffix(augmentation, index)}"),
                "augmentation": augmentation,
                "source_id": sample.sample_id,
            }
        )
        match augmentation:
            case FlipV():
                return sample.map_channels(flip_v, meta)
            case FlipH():
                return sample.map_channels(flip_h, meta)
            case Rotation(angle_deg=angle):
                return sample.map_channels(lambda r: rotate_small(r, angle), meta)
            case Original():
                return sample

    variants.append(derived(FlipV()))
    variants.append(derived(FlipH()))
    for index, angle in enumerate(angles):
        variants.append(derived(Rotation(angle_deg=float(angle)), index))
    return variants
