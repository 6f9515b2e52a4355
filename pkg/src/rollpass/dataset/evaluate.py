import math
from dataclasses import dataclass
from pathlib import Path
from typing import final

import numpy as np
import pandas as pd
from loguru import logger

from rollpass.dataset.manifest import DatasetManifest, Split
from rollpass.dataset.storage import load_sample
from rollpass.estimators.base import Estimator, EstimatorInput
from rollpass.raster.metrics import area_error, jaccard
from rollpass.raster.pbm import write_pbm
from rollpass.raster.raster import difference
from rollpass.raster.sample import SampleId
from rollpass.shared.errors import BothEmpty, DatasetError, EmptyReference, RollpassError
from rollpass.utils.fs import atomic_write_text, ensure_directory_exists
from rollpass.utils.pool import parallel_map

REPORT_COLUMNS = ["id", "jaccard", "area_error", "estimator"]
HISTOGRAM_BINS = 20


@final
@dataclass(frozen=True)
class EvaluationReport:
    estimator_id: str
    rows: pd.DataFrame
    failures: int

    @property
    def mean_jaccard(self) -> float:
        return float(self.rows["jaccard"].mean())

    def histogram(self) -> pd.DataFrame:
        """20 equal bins on [0, 1]; the last bin is closed."""
        counts, edges = np.histogram(
            self.rows["jaccard"].to_numpy(dtype=np.float64), bins=HISTOGRAM_BINS, range=(0.0, 1.0)
        )
        return pd.DataFrame({"bin_lo": edges[:-1], "count": counts})


@final
@dataclass(frozen=True)
class _Row:
    sample_id: SampleId
    jaccard: float
    area_error: float
    failed: bool


def _score(
    estimator: Estimator,
    root: Path,
    sample_id: SampleId,
    resolution_mm: float,
    inlet_closure: float | None,
    diff_dir: Path | None,
) -> _Row | None:
    sample = load_sample(root, sample_id, resolution_mm)
    if inlet_closure is not None and sample.meta.inlet_closure != inlet_closure:
        return None
    try:
        predicted = estimator.estimate(EstimatorInput.from_sample(sample))
    except (RollpassError, ValueError) as e:
        logger.warning(f"{sample_id}: {estimator.estimator_id} failed, scored as 0: {e}")
        return _Row(sample_id, 0.0, math.nan, failed=True)

    if diff_dir is not None:
        write_pbm(diff_dir / f"{sample_id}.{estimator.estimator_id}.pbm", difference(predicted, sample.outlet))
    try:
        score = jaccard(predicted, sample.outlet)
    except BothEmpty:
        logger.warning(f"{sample_id}: prediction and outlet are both empty, scored as 0")
        return _Row(sample_id, 0.0, math.nan, failed=True)
    try:
        error = area_error(predicted, sample.outlet)
    except EmptyReference:
        error = math.nan
    logger.debug(f"{sample_id}: jaccard {score:.4f}, area error {error:.4f}")
    return _Row(sample_id, score, error, failed=False)


def evaluate(
    estimator: Estimator,
    root: Path,
    manifest: DatasetManifest,
    split: Split = "eval",
    inlet_closure: float | None = None,
    diff_dir: Path | None = None,
    jobs: int = 1,
) -> EvaluationReport:
    """
    Score `estimator` on every sample of `split` (optionally only one inlet closure). A sample the
    estimator fails on, or whose prediction and outlet are both empty, becomes a row with jaccard 0
    and no area error instead of aborting the run.

    Raises DatasetError when the selection is empty.
    """
    ids = manifest.ids(split)
    if diff_dir is not None:
        ensure_directory_exists(diff_dir)
    resolution = manifest.raster.resolution_mm
    scored = parallel_map(
        lambda sample_id: _score(estimator, root, sample_id, resolution, inlet_closure, diff_dir),
        ids,
        jobs,
    )
    rows = [row for row in scored if row is not None]
    if not rows:
        raise DatasetError(f"nothing to evaluate in split {split!r} (inlet closure {inlet_closure})")

    frame = pd.DataFrame(
        {
            "id": [row.sample_id for row in rows],
            "jaccard": [row.jaccard for row in rows],
            "area_error": [row.area_error for row in rows],
            "estimator": estimator.estimator_id,
        },
        columns=REPORT_COLUMNS,
    )
    report = EvaluationReport(estimator.estimator_id, frame, sum(row.failed for row in rows))
    logger.info(
        f"{estimator.estimator_id}: mean jaccard {report.mean_jaccard:.4f} over {len(rows)} samples"
        + (f", {report.failures} failed" if report.failures else "")
    )
    return report


def histogram_path(report_path: Path, estimator_id: str) -> Path:
    return report_path.with_name(f"{report_path.stem}.{estimator_id}.hist.csv")


def write_reports(report_path: Path, reports: list[EvaluationReport]) -> list[Path]:
    """One report CSV for all estimators, plus one histogram CSV per estimator next to it."""
    combined = pd.concat([r.rows for r in reports], ignore_index=True)
    atomic_write_text(report_path, combined.to_csv(index=False, lineterminator="\n"))
    written = [report_path]
    for report in reports:
        path = histogram_path(report_path, report.estimator_id)
        atomic_write_text(path, report.histogram().to_csv(index=False, lineterminator="\n"))
        written.append(path)
    return written
