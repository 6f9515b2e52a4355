from pathlib import Path

from rollpass.dataset.generate import generate_dataset
from rollpass.dataset.manifest import DatasetManifest, SampleEntry
from rollpass.estimators.flow import FlowParams
from rollpass.raster.config import RasterConfig
from rollpass.raster.sample import SampleId
from rollpass.rollgen.config import RollGenConfig


def create_dataset(root: Path, count: int = 3, seed: int = 11, jobs: int = 1) -> DatasetManifest:
    return generate_dataset(root, count, seed, FlowParams(loss_fraction=0.5), jobs=jobs)


def create_synthetic_manifest(size: int) -> DatasetManifest:
    """A manifest with `size` entries and nothing on disk."""
    return DatasetManifest(
        seed=0,
        scenario_count=size // 2,
        flow=FlowParams(),
        raster=RasterConfig(),
        rollgen=RollGenConfig(),
        samples=[SampleEntry(sample_id=SampleId(f"{i:06d}")) for i in range(size)],
    )
