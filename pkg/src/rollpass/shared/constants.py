import os
import sys
from pathlib import Path
from typing import Final

_ROLLPASS_HOME_ENV = os.environ.get("ROLLPASS_HOME", None)


def _get_xdg_dir(env_var: str, fallback: str) -> Path:
    """Get XDG directory, prioritising ROLLPASS_HOME environment variable if its set. On non-Linux platforms, default to ~/.rollpass."""

    if _ROLLPASS_HOME_ENV is not None:
        return Path.home() / _ROLLPASS_HOME_ENV

    if sys.platform != "linux":
        return Path.home() / ".rollpass"

    xdg_value = os.environ.get(env_var, None)
    if xdg_value is not None:
        return Path(xdg_value) / "rollpass"
    return Path.home() / fallback / "rollpass"


ROLLPASS_CACHE_HOME = _get_xdg_dir("XDG_CACHE_HOME", ".cache")

# Log file is opt-in: set ROLLPASS_LOG (relative paths resolve under the cache home) or pass --log-file
_ROLLPASS_LOG_ENV = os.environ.get("ROLLPASS_LOG", None)
ROLLPASS_LOG: Path | None = (
    None if _ROLLPASS_LOG_ENV is None else ROLLPASS_CACHE_HOME / _ROLLPASS_LOG_ENV
)

# Fallback seed for every cli subcommand that takes --seed
_ROLLPASS_SEED_ENV = os.environ.get("ROLLPASS_SEED", None)
ROLLPASS_SEED: int = 0 if _ROLLPASS_SEED_ENV is None else int(_ROLLPASS_SEED_ENV)

ROLLPASS_TESTS = os.getenv("ROLLPASS_TESTS", "0") == "1"

# Workpiece diameters available to the generator, mm
DIAMETER_SET: Final[tuple[int, ...]] = (
    20, 24, 28, 30, 34, 38, 42, 46, 48, 50, 52, 54, 56, 58, 60,
)  # fmt: skip

DEFAULT_RASTER_SIZE_PX: Final = 200
DEFAULT_RESOLUTION_MM: Final = 0.5

# Quadrature / sampling densities for the continuous geometry
GAP_QUADRATURE_INTERVALS: Final = 2000
GAP_SAMPLES: Final = 2001
DISK_COLUMNS: Final = 2000

EXTERNAL_PROTOCOL_VERSION: Final = "rollpass-ext/1"
DATASET_SCHEMA_VERSION: Final = "rollpass-ds/1"
PLAN_SCHEMA_VERSION: Final = "rollpass-plan/1"

EXTERNAL_TIMEOUT_SECONDS: Final = 60.0
