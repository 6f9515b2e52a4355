from typing import final, override

from loguru import logger

from rollpass.estimators.base import Estimator, EstimatorInput
from rollpass.raster.morphology import dilate
from rollpass.raster.raster import Raster, intersect

BASELINE2_KERNELS = range(2, 9)


def estimate_baseline1(estimator_input: EstimatorInput) -> Raster:
    """The inlet cut by the rolls: whatever lies in roll material disappears."""
    return intersect(estimator_input.inlet, estimator_input.gap)


def baseline2_sweep(estimator_input: EstimatorInput) -> list[tuple[int, Raster]]:
    """Every candidate (k, dilate(inlet, k) ∩ gap) for k = 2..8."""
    gap = estimator_input.gap
    return [(k, intersect(dilate(estimator_input.inlet, k), gap)) for k in BASELINE2_KERNELS]


def choose_baseline2(estimator_input: EstimatorInput) -> tuple[int, Raster]:
    """The candidate whose area best matches the inlet's; ties go to the smallest k."""
    target = estimator_input.inlet.area_px
    return min(baseline2_sweep(estimator_input), key=lambda kv: (abs(kv[1].area_px - target), kv[0]))


def estimate_baseline2(estimator_input: EstimatorInput) -> Raster:
    k, outlet = choose_baseline2(estimator_input)
    logger.debug(f"baseline2: k={k}, {outlet.area_px} px for a {estimator_input.inlet.area_px} px inlet")
    return outlet


@final
class Baseline1Estimator(Estimator):
    @property
    @override
    def estimator_id(self) -> str:
        return "baseline1"

    @override
    def estimate(self, estimator_input: EstimatorInput) -> Raster:
        return estimate_baseline1(estimator_input)


@final
class Baseline2Estimator(Estimator):
    @property
    @override
    def estimator_id(self) -> str:
        return "baseline2"

    @override
    def estimate(self, estimator_input: EstimatorInput) -> Raster:
        return estimate_baseline2(estimator_input)

    def estimate_with_kernel(self, estimator_input: EstimatorInput) -> tuple[int, Raster]:
        """The outlet together with the dilation size that produced it."""
        return choose_baseline2(estimator_input)
