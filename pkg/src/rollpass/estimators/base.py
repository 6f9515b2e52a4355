from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Self, final

from rollpass.raster.raster import Raster, check_same_shape, complement, union
from rollpass.raster.rasterize import ScenarioRaster
from rollpass.raster.sample import Sample


@final
@dataclass(frozen=True)
class EstimatorInput:
    """What every estimator sees: the inlet and both roll masks at full closure."""

    inlet: Raster
    over_mask: Raster
    under_mask: Raster

    def __post_init__(self):
        check_same_shape(self.inlet, self.over_mask, self.under_mask)
        if self.inlet.is_empty:
            raise ValueError("estimator input needs a nonempty inlet")

    @property
    def gap(self) -> Raster:
        """Everything that is not roll material, including the unconstrained columns beside the rolls."""
        return complement(union(self.over_mask, self.under_mask))

    @classmethod
    def from_scenario_raster(cls, rasters: ScenarioRaster) -> Self:
        return cls(rasters.inlet, rasters.over_mask, rasters.under_mask)

    @classmethod
    def from_sample(cls, sample: Sample) -> Self:
        return cls(sample.inlet, sample.over_mask, sample.under_mask)


class Estimator(ABC):
    """Maps (inlet, over, under) to an outlet shape. Built-in estimators are pure and reentrant."""

    @property
    @abstractmethod
    def estimator_id(self) -> str: ...

    @abstractmethod
    def estimate(self, estimator_input: EstimatorInput) -> Raster: ...

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.estimator_id})"
