import shlex
import shutil
import subprocess
import tempfile
from pathlib import Path
from typing import final, override

from loguru import logger

from rollpass.estimators.base import Estimator, EstimatorInput
from rollpass.raster.pbm import read_pbm, write_pbm
from rollpass.raster.raster import Raster
from rollpass.shared.constants import EXTERNAL_PROTOCOL_VERSION, EXTERNAL_TIMEOUT_SECONDS
from rollpass.shared.errors import EstimatorTimeout, ExternalFailure, PbmFormatError
from rollpass.utils.fs import atomic_write_text

INLET_FILE = "inlet.pbm"
OVER_FILE = "over.pbm"
UNDER_FILE = "under.pbm"
OUTLET_FILE = "outlet.pbm"
PROTOCOL_FILE = "PROTOCOL"


def write_protocol_inputs(directory: Path, estimator_input: EstimatorInput) -> None:
    write_pbm(directory / INLET_FILE, estimator_input.inlet)
    write_pbm(directory / OVER_FILE, estimator_input.over_mask)
    write_pbm(directory / UNDER_FILE, estimator_input.under_mask)
    atomic_write_text(directory / PROTOCOL_FILE, EXTERNAL_PROTOCOL_VERSION + "\n")


def estimate_external(
    estimator_input: EstimatorInput,
    command: str,
    timeout: float = EXTERNAL_TIMEOUT_SECONDS,
) -> Raster:
    """
    Run `<command> <dir>` on a fresh working directory holding inlet.pbm, over.pbm, under.pbm and
    PROTOCOL, and read back outlet.pbm.

    Raises ExternalFailure (command missing, nonzero exit, missing or ill-formed outlet) and
    EstimatorTimeout. The working directory is deleted on success and kept for inspection on
    failure; both errors carry its path.
    """
    workdir = Path(tempfile.mkdtemp(prefix="rollpass-ext-"))
    write_protocol_inputs(workdir, estimator_input)
    argv = [*shlex.split(command), str(workdir)]
    logger.debug(f"external estimator: {shlex.join(argv)}")

    try:
        result = subprocess.run(argv, capture_output=True, text=True, timeout=timeout, check=False)
    except subprocess.TimeoutExpired as e:
        logger.warning(f"external estimator timed out after {timeout}s, keeping {workdir}")
        raise EstimatorTimeout(f"{command!r} timed out after {timeout}s", workdir) from e
    except OSError as e:
        logger.warning(f"external estimator could not start, keeping {workdir}")
        raise ExternalFailure(f"could not run {command!r}: {e}", None, workdir) from e

    if result.returncode != 0:
        logger.warning(
            f"external estimator exited {result.returncode}, keeping {workdir}: {result.stderr.strip()}"
        )
        raise ExternalFailure(
            f"{command!r} exited with status {result.returncode}", result.returncode, workdir
        )

    try:
        outlet = read_pbm(workdir / OUTLET_FILE, estimator_input.inlet.resolution_mm)
    except (OSError, PbmFormatError) as e:
        logger.warning(f"external estimator produced no readable {OUTLET_FILE}, keeping {workdir}")
        raise ExternalFailure(f"{command!r} produced no valid {OUTLET_FILE}: {e}", 0, workdir) from e
    if outlet.bits.shape != estimator_input.inlet.bits.shape:
        logger.warning(f"external estimator outlet has the wrong size, keeping {workdir}")
        raise ExternalFailure(
            f"{OUTLET_FILE} is {outlet.width_px}x{outlet.height_px}, expected "
            f"{estimator_input.inlet.width_px}x{estimator_input.inlet.height_px}",
            0,
            workdir,
        )

    shutil.rmtree(workdir, ignore_errors=True)
    return outlet


@final
class ExternalEstimator(Estimator):
    def __init__(self, command: str, timeout: float = EXTERNAL_TIMEOUT_SECONDS):
        self.command = command
        self.timeout = timeout

    @property
    @override
    def estimator_id(self) -> str:
        return "ext"

    @override
    def estimate(self, estimator_input: EstimatorInput) -> Raster:
        return estimate_external(estimator_input, self.command, self.timeout)
