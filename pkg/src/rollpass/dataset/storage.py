from dataclasses import dataclass
from pathlib import Path
from typing import final

from pydantic import ValidationError

from rollpass.dataset.manifest import DatasetManifest, load_manifest
from rollpass.estimators.external import INLET_FILE, OUTLET_FILE, OVER_FILE, UNDER_FILE
from rollpass.raster.pbm import read_pbm, write_pbm
from rollpass.raster.sample import Sample, SampleId, SampleMeta
from rollpass.shared.errors import DatasetError, PbmFormatError
from rollpass.utils.fs import atomic_directory, atomic_write_text

SAMPLES_DIR = "samples"
META_FILE = "meta.json"


def sample_dir(root: Path, sample_id: SampleId) -> Path:
    """One directory per sample, laid out like an external-estimator working directory plus outlet and meta."""
    return root / SAMPLES_DIR / sample_id


def write_sample_files(directory: Path, sample: Sample) -> None:
    write_pbm(directory / INLET_FILE, sample.inlet)
    write_pbm(directory / OVER_FILE, sample.over_mask)
    write_pbm(directory / UNDER_FILE, sample.under_mask)
    write_pbm(directory / OUTLET_FILE, sample.outlet)
    atomic_write_text(directory / META_FILE, sample.meta.model_dump_json(indent=2) + "\n")


def write_sample(root: Path, sample: Sample) -> None:
    """Replace the sample's directory as a whole."""
    with atomic_directory(sample_dir(root, sample.sample_id)) as staging:
        write_sample_files(staging, sample)


def load_sample(root: Path, sample_id: SampleId, resolution_mm: float) -> Sample:
    """Raises DatasetError when a file is missing or unreadable."""
    directory = sample_dir(root, sample_id)
    try:
        meta = SampleMeta.model_validate_json((directory / META_FILE).read_text())
        return Sample(
            inlet=read_pbm(directory / INLET_FILE, resolution_mm),
            over_mask=read_pbm(directory / OVER_FILE, resolution_mm),
            under_mask=read_pbm(directory / UNDER_FILE, resolution_mm),
            outlet=read_pbm(directory / OUTLET_FILE, resolution_mm),
            meta=meta,
        )
    except (OSError, ValidationError, PbmFormatError) as e:
        raise DatasetError(f"cannot load sample {sample_id} from {directory}: {e}") from e


@final
@dataclass(frozen=True)
class Dataset:
    manifest: DatasetManifest
    samples: dict[SampleId, Sample]


def load_dataset(root: Path) -> Dataset:
    manifest = load_manifest(root)
    resolution = manifest.raster.resolution_mm
    return Dataset(
        manifest,
        {sample_id: load_sample(root, sample_id, resolution) for sample_id in manifest.ids()},
    )
