from pathlib import Path

from loguru import logger

from rollpass.dataset.manifest import DatasetManifest, SampleEntry, Split
from rollpass.dataset.storage import load_sample, write_sample
from rollpass.raster.sample import SampleId
from rollpass.raster.transforms import augment
from rollpass.shared.errors import DatasetError
from rollpass.shared.rng import RngStream
from rollpass.utils.pool import parallel_map

# Augmentation streams start here, clear of the scenario streams (from 0) and the split stream (1 << 63)
AUGMENT_STREAM_BASE = 1 << 62


def augment_split(
    root: Path,
    manifest: DatasetManifest,
    seed: int,
    split: Split = "train",
    jobs: int = 1,
) -> DatasetManifest:
    """
    Write six augmented variants next to every sample of `split` and list them in the manifest
    under the same split. Sample i of the manifest draws its angles from stream
    (seed, AUGMENT_STREAM_BASE + i).

    Raises DatasetError if the split is empty or was already augmented.
    """
    sources = [
        (position, entry)
        for position, entry in enumerate(manifest.samples)
        if entry.split == split and entry.source_id is None
    ]
    if not sources:
        raise DatasetError(f"split {split!r} has no samples")
    if any(e.split == split and e.source_id is not None for e in manifest.samples):
        raise DatasetError(f"split {split!r} is already augmented")

    resolution = manifest.raster.resolution_mm

    def augment_one(item: tuple[int, SampleEntry]) -> list[SampleId]:
        position, entry = item
        sample = load_sample(root, entry.sample_id, resolution)
        variants = augment(sample, RngStream(seed, AUGMENT_STREAM_BASE + position))[1:]
        for variant in variants:
            write_sample(root, variant)
        return [variant.sample_id for variant in variants]

    written = parallel_map(augment_one, sources, jobs)
    added = [
        SampleEntry(sample_id=sample_id, split=split, source_id=entry.sample_id)
        for (_, entry), ids in zip(sources, written, strict=True)
        for sample_id in ids
    ]
    logger.info(f"augmented {len(sources)} {split} samples into {len(sources) + len(added)}")
    return manifest.model_copy(
        update={"samples": [*manifest.samples, *added], "augment_seed": seed}
    )
