from rollpass.dataset.augment import augment_split
from rollpass.dataset.evaluate import (
    EvaluationReport,
    evaluate,
    histogram_path,
    write_reports,
)
from rollpass.dataset.generate import (
    full_sample_id,
    generate_dataset,
    half_sample_id,
    regenerate_sample,
    scenario_samples,
)
from rollpass.dataset.manifest import (
    SPLITS,
    DatasetManifest,
    SampleEntry,
    Split,
    load_manifest,
    save_manifest,
)
from rollpass.dataset.split import largest_remainder, split_dataset
from rollpass.dataset.storage import Dataset, load_dataset, load_sample, sample_dir, write_sample
from rollpass.raster.sample import Sample, SampleId, SampleMeta

__all__ = [
    "SPLITS",
    "Dataset",
    "DatasetManifest",
    "EvaluationReport",
    "Sample",
    "SampleEntry",
    "SampleId",
    "SampleMeta",
    "Split",
    "augment_split",
    "evaluate",
    "full_sample_id",
    "generate_dataset",
    "half_sample_id",
    "histogram_path",
    "largest_remainder",
    "load_dataset",
    "load_manifest",
    "load_sample",
    "regenerate_sample",
    "sample_dir",
    "save_manifest",
    "scenario_samples",
    "split_dataset",
    "write_reports",
    "write_sample",
]
