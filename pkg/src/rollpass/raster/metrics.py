from rollpass.raster.raster import Raster, check_same_shape
from rollpass.shared.errors import BothEmpty, EmptyReference


def jaccard(a: Raster, b: Raster) -> float:
    """
    Intersection over union.

    Raises BothEmpty when both shapes are empty: the score is undefined there, and the evaluation
    loop reports it per sample rather than picking a value.
    """
    check_same_shape(a, b)
    union_px = int((a.bits | b.bits).sum())
    if union_px == 0:
        raise BothEmpty("jaccard index of two empty rasters is undefined")
    return int((a.bits & b.bits).sum()) / union_px


def area_error(simulated: Raster, real: Raster) -> float:
    """Mismatched pixels relative to the real shape: (|sim ∪ real| - |sim ∩ real|) / |real|. Unbounded above."""
    check_same_shape(simulated, real)
    real_px = real.area_px
    if real_px == 0:
        raise EmptyReference("area error against an empty reference is undefined")
    mismatch = int((simulated.bits ^ real.bits).sum())
    return mismatch / real_px
