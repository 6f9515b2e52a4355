from collections.abc import Callable
from dataclasses import dataclass, replace
from typing import NewType, Self, final

from pydantic import Field, field_validator

from rollpass.raster.raster import Raster
from rollpass.utils.pydantic_ext import FrozenModel, TaggedModel

SampleId = NewType("SampleId", str)

INLET_CLOSURES = (0.0, 0.5)


class Original(TaggedModel):
    pass


class FlipV(TaggedModel):
    pass


class FlipH(TaggedModel):
    pass


class Rotation(TaggedModel):
    angle_deg: float = Field(ge=-3.0, le=3.0)


Augmentation = Original | FlipV | FlipH | Rotation


class SampleMeta(FrozenModel):
    sample_id: SampleId
    seed: int
    stream_id: int
    diameter_mm: float
    width_mm: float
    temperature_c: float
    loss_fraction: float
    inlet_closure: float
    augmentation: Augmentation = Original()
    source_id: SampleId | None = None

    @field_validator("inlet_closure")
    @classmethod
    def _known_closure(cls, v: float) -> float:
        if v not in INLET_CLOSURES:
            raise ValueError(f"inlet_closure must be one of {INLET_CLOSURES}, got {v}")
        return v


@final
@dataclass(frozen=True)
class Sample:
    """One training example: inlet, both roll masks at full closure, and the estimated outlet."""

    inlet: Raster
    over_mask: Raster
    under_mask: Raster
    outlet: Raster
    meta: SampleMeta

    @property
    def sample_id(self) -> SampleId:
        return self.meta.sample_id

    @property
    def channels(self) -> tuple[Raster, Raster, Raster, Raster]:
        return (self.inlet, self.over_mask, self.under_mask, self.outlet)

    def map_channels(self, fn: Callable[[Raster], Raster], meta: SampleMeta) -> Self:
        return replace(
            self,
            inlet=fn(self.inlet),
            over_mask=fn(self.over_mask),
            under_mask=fn(self.under_mask),
            outlet=fn(self.outlet),
            meta=meta,
        )
