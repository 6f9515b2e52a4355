from rollpass.estimators.base import Estimator
from rollpass.estimators.baselines import Baseline1Estimator, Baseline2Estimator
from rollpass.estimators.external import ExternalEstimator
from rollpass.estimators.flow import FlowEstimator, FlowParams
from rollpass.shared.constants import EXTERNAL_TIMEOUT_SECONDS
from rollpass.shared.errors import UsageError

EXTERNAL_PREFIX = "ext:"
ESTIMATOR_NAMES = ("baseline1", "baseline2", "flow", f"{EXTERNAL_PREFIX}<cmd>")


def parse_estimator(
    spec: str,
    flow_params: FlowParams = FlowParams(),
    timeout: float = EXTERNAL_TIMEOUT_SECONDS,
) -> Estimator:
    """
    Resolve `baseline1`, `baseline2`, `flow` or `ext:<command>`.

    Raises UsageError for anything else; the cli maps it to exit code 1.
    """
    match spec:
        case "baseline1":
            return Baseline1Estimator()
        case "baseline2":
            return Baseline2Estimator()
        case "flow":
            return FlowEstimator(flow_params)
        case _ if spec.startswith(EXTERNAL_PREFIX) and spec[len(EXTERNAL_PREFIX) :].strip():
            return ExternalEstimator(spec[len(EXTERNAL_PREFIX) :].strip(), timeout)
        case _:
            raise UsageError(
                f"unknown estimator {spec!r}, expected one of {', '.join(ESTIMATOR_NAMES)}"
            )
