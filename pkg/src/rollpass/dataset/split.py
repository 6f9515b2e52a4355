import math
from collections.abc import Sequence

from loguru import logger

from rollpass.dataset.manifest import SPLITS, DatasetManifest
from rollpass.shared.errors import DatasetError
from rollpass.shared.rng import RngStream

# Stream reserved for the split permutation; scenario streams count up from 0
SPLIT_STREAM_ID = 1 << 63


def largest_remainder(total: int, fractions: Sequence[float]) -> list[int]:
    """Integer sizes proportional to `fractions` summing to `total`: floor each, then hand the rest out by largest remainder."""
    if any(f < 0 for f in fractions):
        raise ValueError(f"fractions must be non-negative, got {list(fractions)}")
    if not math.isclose(sum(fractions), 1.0, rel_tol=0.0, abs_tol=1e-9):
        raise ValueError(f"fractions must sum to 1, got {sum(fractions)}")

    raw = [f * total for f in fractions]
    result = [int(r) for r in raw]
    by_remainder = sorted(range(len(raw)), key=lambda i: raw[i] - result[i], reverse=True)
    for i in range(total - sum(result)):
        result[by_remainder[i]] += 1
    return result


def split_dataset(
    manifest: DatasetManifest, fractions: tuple[float, float, float], seed: int
) -> DatasetManifest:
    """
    Shuffle the samples with a stream of `seed` and cut the permutation into train, val and eval.

    Raises DatasetError on an augmented manifest: variants must stay with their source, so splitting
    comes first.
    """
    if manifest.is_augmented:
        raise DatasetError("dataset is already augmented; split before augmenting")
    sizes = largest_remainder(len(manifest.samples), fractions)
    order = RngStream(seed, SPLIT_STREAM_ID).permutation(len(manifest.samples))

    assignment = [SPLITS[0]] * len(manifest.samples)
    start = 0
    for split, size in zip(SPLITS, sizes, strict=True):
        for position in order[start : start + size]:
            assignment[int(position)] = split
        start += size

    samples = [
        entry.model_copy(update={"split": split})
        for entry, split in zip(manifest.samples, assignment, strict=True)
    ]
    logger.info(f"split {len(samples)} samples: " + ", ".join(f"{s}={n}" for s, n in zip(SPLITS, sizes, strict=True)))
    return manifest.model_copy(update={"samples": samples, "split_seed": seed})
