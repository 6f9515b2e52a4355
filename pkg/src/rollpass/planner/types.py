from dataclasses import dataclass
from typing import final

from pydantic import Field

from rollpass.estimators.base import Estimator
from rollpass.planner.stand import StandConfig, StandDocument, apply_stand
from rollpass.raster.raster import Raster
from rollpass.shared.constants import PLAN_SCHEMA_VERSION
from rollpass.utils.pydantic_ext import FrozenModel


@final
@dataclass(frozen=True)
class PlanNode:
    """A shape in the search tree. The root (level 0) has no stand and no parent."""

    shape: Raster
    config: StandConfig | None
    parent: int | None
    level: int
    score: float

    def __post_init__(self):
        if (self.level == 0) != (self.config is None):
            raise ValueError("only the root node may lack a stand configuration")


@final
@dataclass(frozen=True)
class Plan:
    steps: tuple[StandConfig, ...]
    final_shape: Raster
    score: float

    @property
    def depth(self) -> int:
        return len(self.steps)

    def trace(self, inlet: Raster, estimator: Estimator) -> list[Raster]:
        """The shape after each stand, in order; the last entry reproduces `final_shape`."""
        shapes: list[Raster] = []
        shape = inlet
        for stand in self.steps:
            shape = apply_stand(shape, stand, estimator)
            shapes.append(shape)
        return shapes


class PlanDocument(FrozenModel):
    """A plan on disk. Profiles are stored as explicit knots, so loading needs no seed."""

    schema_version: str = PLAN_SCHEMA_VERSION
    score: float = Field(ge=0.0, le=1.0)
    steps: list[StandDocument]
    estimator_id: str
    seed: int
    n: int
    d: int

    def stands(self) -> list[StandConfig]:
        return [StandConfig.from_document(step) for step in self.steps]
