from dataclasses import dataclass
from typing import Literal, Self, final

from rollpass.estimators.base import Estimator, EstimatorInput
from rollpass.geometry.profile import ProfileKnots, RollProfile, place_scenario
from rollpass.raster.raster import Raster
from rollpass.raster.rasterize import rasterize_rolls
from rollpass.raster.transforms import rotate_quarter
from rollpass.utils.pydantic_ext import FrozenModel

type QuarterTurn = Literal[0, 90, 180, 270]
QUARTER_TURNS: tuple[QuarterTurn, ...] = (0, 90, 180, 270)


class StandDocument(FrozenModel):
    profile: ProfileKnots
    rotation: QuarterTurn = 0


@final
@dataclass(frozen=True)
class StandConfig:
    """One stand: the inlet is turned by `rotation` degrees, then rolled between `profile`."""

    profile: RollProfile
    rotation: QuarterTurn = 0

    def to_document(self) -> StandDocument:
        return StandDocument(profile=self.profile.to_knots(), rotation=self.rotation)

    @classmethod
    def from_document(cls, document: StandDocument) -> Self:
        return cls(RollProfile.from_knots(document.profile), document.rotation)


def stand_input(shape: Raster, stand: StandConfig) -> EstimatorInput:
    """Turn the shape, then place the stand's rolls around the grid center at full closure."""
    rotated = rotate_quarter(shape, stand.rotation)
    over, under = rasterize_rolls(place_scenario(stand.profile), rotated.config)
    return EstimatorInput(rotated, over, under)


def touches_rolls(estimator_input: EstimatorInput) -> bool:
    roll = estimator_input.over_mask.bits | estimator_input.under_mask.bits
    return bool((estimator_input.inlet.bits & roll).any())


def apply_stand(shape: Raster, stand: StandConfig, estimator: Estimator) -> Raster:
    """Outlets are not turned back: a rotation carries over to every later stand."""
    return estimator.estimate(stand_input(shape, stand))
