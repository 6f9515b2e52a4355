from pathlib import Path

import tomlkit
from pydantic import ValidationError
from tomlkit.exceptions import TOMLKitError

from rollpass.estimators.flow import FlowParams
from rollpass.raster.config import RasterConfig
from rollpass.rollgen.config import RollGenConfig
from rollpass.shared.errors import UsageError
from rollpass.utils.pydantic_ext import FrozenModel


class ToolConfig(FrozenModel):
    """The `[raster]`, `[rollgen]` and `[flow]` tables of a `--config` file; missing tables keep their defaults."""

    raster: RasterConfig = RasterConfig()
    rollgen: RollGenConfig = RollGenConfig()
    flow: FlowParams = FlowParams()


def load_tool_config(path: Path | None) -> ToolConfig:
    """Raises UsageError for an unreadable or invalid file."""
    if path is None:
        return ToolConfig()
    try:
        document = tomlkit.loads(path.read_text()).unwrap()
        return ToolConfig.model_validate(document)
    except (OSError, TOMLKitError, ValidationError) as e:
        raise UsageError(f"invalid config file {path}: {e}") from e


def dump_tool_config(config: ToolConfig) -> str:
    return tomlkit.dumps(config.model_dump(mode="json"))  # pyright: ignore[reportUnknownMemberType]
