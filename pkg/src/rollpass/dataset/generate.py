from pathlib import Path

from loguru import logger

from rollpass.dataset.manifest import DatasetManifest, SampleEntry, save_manifest
from rollpass.dataset.storage import SAMPLES_DIR, write_sample_files
from rollpass.estimators.base import EstimatorInput
from rollpass.estimators.flow import FlowParams, estimate_flow
from rollpass.geometry.profile import Scenario
from rollpass.raster.config import RasterConfig
from rollpass.raster.raster import is_subset
from rollpass.raster.rasterize import rasterize_scenario
from rollpass.raster.sample import Sample, SampleId, SampleMeta
from rollpass.rollgen.config import RollGenConfig
from rollpass.rollgen.generator import generate_scenario
from rollpass.shared.errors import DatasetError
from rollpass.shared.rng import RngStream
from rollpass.utils.fs import atomic_directory
from rollpass.utils.pool import parallel_map

HALF_CLOSURE = 0.5


def full_sample_id(index: int) -> SampleId:
    return SampleId(f"{index:06d}-full")


def half_sample_id(index: int) -> SampleId:
    return SampleId(f"{index:06d}-half")


def scenario_samples(
    scenario: Scenario,
    index: int,
    params: FlowParams = FlowParams(),
    raster: RasterConfig = RasterConfig(),
) -> tuple[Sample, Sample]:
    """
    Two samples from one scenario sharing one outlet: (a) the round inlet, and (b) the shape after
    the rolls have travelled half way, treated as the inlet of its own sample.
    """
    closed = rasterize_scenario(scenario, 1.0, raster)
    half = rasterize_scenario(scenario, HALF_CLOSURE, raster)
    outlet = estimate_flow(EstimatorInput.from_scenario_raster(closed), params)
    intermediate = estimate_flow(EstimatorInput.from_scenario_raster(half), params)
    if not is_subset(outlet, intermediate):
        logger.warning(
            f"scenario {index}: final shape leaves the intermediate shape "
            f"({int((outlet.bits & ~intermediate.bits).sum())} px)"
        )

    def meta(sample_id: SampleId, closure: float) -> SampleMeta:
        return SampleMeta(
            sample_id=sample_id,
            seed=scenario.seed,
            stream_id=scenario.stream_id,
            diameter_mm=scenario.diameter,
            width_mm=scenario.profile.width,
            temperature_c=scenario.temperature,
            loss_fraction=params.loss_fraction,
            inlet_closure=closure,
        )

    masks = (closed.over_mask, closed.under_mask)
    return (
        Sample(closed.inlet, *masks, outlet, meta(full_sample_id(index), 0.0)),
        Sample(intermediate, *masks, outlet, meta(half_sample_id(index), HALF_CLOSURE)),
    )


def regenerate_sample(
    meta: SampleMeta,
    rollgen: RollGenConfig = RollGenConfig(),
    raster: RasterConfig = RasterConfig(),
) -> Sample:
    """Rebuild an unaugmented sample from its metadata alone."""
    if meta.source_id is not None:
        raise DatasetError(f"{meta.sample_id} is an augmented variant; regenerate {meta.source_id} instead")
    scenario = generate_scenario(RngStream(meta.seed, meta.stream_id), rollgen)
    full, half = scenario_samples(
        scenario, meta.stream_id, FlowParams(loss_fraction=meta.loss_fraction), raster
    )
    return half if meta.inlet_closure == HALF_CLOSURE else full


def generate_dataset(
    root: Path,
    count: int,
    seed: int,
    params: FlowParams = FlowParams(),
    rollgen: RollGenConfig = RollGenConfig(),
    raster: RasterConfig = RasterConfig(),
    jobs: int = 1,
) -> DatasetManifest:
    """
    Generate `count` scenarios, two samples each, under `root`. Scenario i draws from stream
    (seed, i), so the tree is identical whatever `jobs` is; an existing sample tree is replaced.

    GenerationExhausted from rollgen propagates.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")

    with atomic_directory(root / SAMPLES_DIR) as staging:

        def generate_one(index: int) -> tuple[SampleId, SampleId]:
            scenario = generate_scenario(RngStream(seed, index), rollgen)
            samples = scenario_samples(scenario, index, params, raster)
            for sample in samples:
                write_sample_files(staging / sample.sample_id, sample)
            logger.debug(f"scenario {index}: D={scenario.diameter} mm, width={scenario.profile.width:.1f} mm")
            return samples[0].sample_id, samples[1].sample_id

        pairs = parallel_map(generate_one, list(range(count)), jobs)

    manifest = DatasetManifest(
        seed=seed,
        scenario_count=count,
        flow=params,
        raster=raster,
        rollgen=rollgen,
        samples=[SampleEntry(sample_id=sample_id) for pair in pairs for sample_id in pair],
    )
    save_manifest(root, manifest)
    logger.info(f"wrote {len(manifest.samples)} samples from {count} scenarios to {root}")
    return manifest
