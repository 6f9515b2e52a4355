from rollpass.estimators.base import Estimator, EstimatorInput
from rollpass.estimators.baselines import (
    Baseline1Estimator,
    Baseline2Estimator,
    choose_baseline2,
    estimate_baseline1,
    estimate_baseline2,
)
from rollpass.estimators.external import ExternalEstimator, estimate_external
from rollpass.estimators.flow import FlowEstimator, FlowParams, FlowReport, estimate_flow, flow_report
from rollpass.estimators.registry import parse_estimator

__all__ = [
    "Baseline1Estimator",
    "Baseline2Estimator",
    "Estimator",
    "EstimatorInput",
    "ExternalEstimator",
    "FlowEstimator",
    "FlowParams",
    "FlowReport",
    "choose_baseline2",
    "estimate_baseline1",
    "estimate_baseline2",
    "estimate_external",
    "estimate_flow",
    "flow_report",
    "parse_estimator",
]
