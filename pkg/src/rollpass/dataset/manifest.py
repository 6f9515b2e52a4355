from pathlib import Path
from typing import Literal, Self

from filelock import FileLock
from pydantic import ValidationError, field_validator, model_validator

from rollpass.estimators.flow import FlowParams
from rollpass.raster.config import RasterConfig
from rollpass.raster.sample import SampleId
from rollpass.rollgen.config import RollGenConfig
from rollpass.shared.constants import DATASET_SCHEMA_VERSION
from rollpass.shared.errors import DatasetError
from rollpass.utils.fs import atomic_write_text
from rollpass.utils.pydantic_ext import FrozenModel

type Split = Literal["train", "val", "eval"]
SPLITS: tuple[Split, ...] = ("train", "val", "eval")

MANIFEST_FILE = "manifest.json"


class SampleEntry(FrozenModel):
    sample_id: SampleId
    split: Split | None = None
    # Set on augmented variants: the sample they were derived from
    source_id: SampleId | None = None


class DatasetManifest(FrozenModel):
    schema_version: str = DATASET_SCHEMA_VERSION
    seed: int
    scenario_count: int
    flow: FlowParams
    raster: RasterConfig
    rollgen: RollGenConfig
    samples: list[SampleEntry]
    split_seed: int | None = None
    augment_seed: int | None = None

    @field_validator("schema_version")
    @classmethod
    def _known_schema(cls, v: str) -> str:
        if v != DATASET_SCHEMA_VERSION:
            raise ValueError(f"unsupported dataset schema {v!r}, expected {DATASET_SCHEMA_VERSION!r}")
        return v

    @model_validator(mode="after")
    def _unique_ids(self) -> Self:
        ids = [entry.sample_id for entry in self.samples]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate sample ids in manifest")
        return self

    def ids(self, split: Split | None = None) -> list[SampleId]:
        """Sample ids in manifest order, optionally restricted to one split."""
        return [e.sample_id for e in self.samples if split is None or e.split == split]

    def counts(self) -> dict[str, int]:
        counts = {split: 0 for split in SPLITS} | {"unassigned": 0}
        for entry in self.samples:
            counts[entry.split or "unassigned"] += 1
        return counts

    @property
    def is_augmented(self) -> bool:
        return any(e.source_id is not None for e in self.samples)


def manifest_path(root: Path) -> Path:
    return root / MANIFEST_FILE


def save_manifest(root: Path, manifest: DatasetManifest) -> None:
    path = manifest_path(root)
    with FileLock(path.with_name(path.name + ".lock")):
        atomic_write_text(path, manifest.model_dump_json(indent=2) + "\n")


def load_manifest(root: Path) -> DatasetManifest:
    """Raises DatasetError for a missing or malformed manifest."""
    path = manifest_path(root)
    try:
        return DatasetManifest.model_validate_json(path.read_text())
    except FileNotFoundError as e:
        raise DatasetError(f"no dataset at {root}: {path} does not exist") from e
    except ValidationError as e:
        raise DatasetError(f"malformed manifest {path}: {e}") from e
