from dataclasses import dataclass
from typing import Literal, final, override

import numpy as np
from loguru import logger
from pydantic import Field

from rollpass.estimators.base import Estimator, EstimatorInput
from rollpass.raster.raster import Raster, intersect
from rollpass.utils.pydantic_ext import FrozenModel


class FlowParams(FrozenModel):
    """
    Mass-flow surrogate parameters. `loss_fraction` is the share of roll-displaced material that
    leaves the cross-section plane (elongation); the rest flows sideways. Fixed per dataset.
    """

    loss_fraction: float = Field(default=0.5, ge=0.0, le=1.0)
    growth_order: Literal["rows_top_down"] = "rows_top_down"


@final
@dataclass(frozen=True)
class FlowReport:
    outlet: Raster
    displaced_px: int
    target_px: int

    @property
    def saturated(self) -> bool:
        """The gap ran out of room before the target area was reached."""
        return self.outlet.area_px < self.target_px


def flow_report(estimator_input: EstimatorInput, params: FlowParams = FlowParams()) -> FlowReport:
    """
    Deterministic stand-in for a finite-element solve. The inlet is cut by the rolls; a fixed share
    of the cut material is conserved and pushed sideways, one pixel per row end per sweep, rows top
    to bottom, left before right, until the conserved area is back or no row can grow.

    Material only flows along rows: gap pockets above or below the inlet rows are never filled.
    """
    gap = estimator_input.gap
    clipped = intersect(estimator_input.inlet, gap)
    displaced = estimator_input.inlet.area_px - clipped.area_px
    target = estimator_input.inlet.area_px - round(params.loss_fraction * displaced)

    remaining = target - clipped.area_px
    if remaining <= 0:
        return FlowReport(clipped, displaced, target)

    bits = clipped.bits.copy()
    free = gap.bits
    width = bits.shape[1]
    rows = np.flatnonzero(bits.any(axis=1))
    lo = bits[rows].argmax(axis=1)
    hi = width - 1 - bits[rows, ::-1].argmax(axis=1)

    while remaining > 0:
        left = (lo > 0) & free[rows, np.maximum(lo - 1, 0)]
        right = (hi < width - 1) & free[rows, np.minimum(hi + 1, width - 1)]
        # Additions in sweep order: row by row, left end before right end
        candidates = np.stack([left, right], axis=1).ravel()
        if not candidates.any():
            break
        taken = candidates & (np.cumsum(candidates) <= remaining)
        take_left, take_right = taken[0::2], taken[1::2]
        lo = lo - take_left
        hi = hi + take_right
        bits[rows[take_left], lo[take_left]] = True
        bits[rows[take_right], hi[take_right]] = True
        remaining -= int(taken.sum())

    report = FlowReport(clipped.with_bits(bits), displaced, target)
    if report.saturated:
        logger.debug(f"flow saturated at {report.outlet.area_px} px, target {target} px")
    return report


def estimate_flow(estimator_input: EstimatorInput, params: FlowParams = FlowParams()) -> Raster:
    return flow_report(estimator_input, params).outlet


@final
class FlowEstimator(Estimator):
    def __init__(self, params: FlowParams = FlowParams()):
        self.params = params

    @property
    @override
    def estimator_id(self) -> str:
        return "flow"

    @override
    def estimate(self, estimator_input: EstimatorInput) -> Raster:
        return estimate_flow(estimator_input, self.params)

    def estimate_with_report(self, estimator_input: EstimatorInput) -> FlowReport:
        return flow_report(estimator_input, self.params)
