from typing import final, override

from rollpass.estimators.base import Estimator, EstimatorInput
from rollpass.geometry.curves import Point2
from rollpass.geometry.profile import Disk
from rollpass.geometry.tests.conftest import create_flat_profile
from rollpass.planner.stand import QuarterTurn, StandConfig
from rollpass.raster.raster import Raster
from rollpass.raster.rasterize import rasterize_disk
from rollpass.shared.errors import RollpassError


def create_disk_inlet(diameter: float = 24.0) -> Raster:
    return rasterize_disk(Disk(Point2(0.0, 0.0), diameter / 2))


def create_flat_stand(gap: float = 16.0, rotation: QuarterTurn = 0) -> StandConfig:
    return StandConfig(create_flat_profile(gap=gap, width=100.0), rotation)


@final
class CountingEstimator(Estimator):
    """Returns the whole frame and counts how often it was asked."""

    def __init__(self):
        self.calls = 0

    @property
    @override
    def estimator_id(self) -> str:
        return "counting"

    @override
    def estimate(self, estimator_input: EstimatorInput) -> Raster:
        self.calls += 1
        return Raster.full(estimator_input.inlet.config)


@final
class FailingEstimator(Estimator):
    @property
    @override
    def estimator_id(self) -> str:
        return "failing"

    @override
    def estimate(self, estimator_input: EstimatorInput) -> Raster:
        raise RollpassError("solver diverged")
