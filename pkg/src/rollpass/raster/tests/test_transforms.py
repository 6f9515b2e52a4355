import pytest

from rollpass.geometry.profile import Scenario
from rollpass.geometry.tests.conftest import create_flat_profile
from rollpass.raster.config import RasterConfig
from rollpass.raster.raster import Raster
from rollpass.raster.rasterize import rasterize_scenario
from rollpass.raster.sample import FlipH, FlipV, Original, Rotation, Sample, SampleId, SampleMeta
from rollpass.raster.tests.conftest import create_block, create_random_raster
from rollpass.raster.transforms import augment, flip_h, flip_v, rotate_quarter, rotate_small
from rollpass.shared.errors import DimensionMismatch
from rollpass.shared.rng import RngStream


def _create_sample() -> Sample:
    scenario = Scenario(create_flat_profile(gap=20.0, width=100.0), 40.0, 1000.0, seed=0)
    rasters = rasterize_scenario(scenario, 1.0)
    meta = SampleMeta(
        sample_id=SampleId("000000-full"),
        seed=0,
        stream_id=0,
        diameter_mm=40.0,
        width_mm=100.0,
        temperature_c=1000.0,
        loss_fraction=0.5,
        inlet_closure=0.0,
    )
    return Sample(rasters.inlet, rasters.over_mask, rasters.under_mask, rasters.gap, meta)


def test_flips_are_involutions():
    x = create_random_raster(3)

    assert flip_h(flip_h(x)) == x
    assert flip_v(flip_v(x)) == x
    assert flip_h(x) != x


def test_flip_h_mirrors_columns():
    block = create_block(0, 0, 1, 1)

    assert flip_h(block) == create_block(0, 199, 1, 1)
    assert flip_v(block) == create_block(199, 0, 1, 1)


def test_quarter_turns():
    x = create_random_raster(4)

    assert rotate_quarter(rotate_quarter(rotate_quarter(rotate_quarter(x, 90), 90), 90), 90) == x
    assert rotate_quarter(x, 0) == x
    assert rotate_quarter(x, 180) == rotate_quarter(rotate_quarter(x, 90), 90)
    # counterclockwise: top-left goes to bottom-left
    assert rotate_quarter(create_block(0, 0, 1, 1), 90) == create_block(199, 0, 1, 1)


def test_quarter_turn_rejects_non_square_frames_and_odd_angles():
    wide = Raster.empty(RasterConfig(width_px=20, height_px=10))

    with pytest.raises(DimensionMismatch):
        rotate_quarter(wide, 90)
    assert rotate_quarter(wide, 180).bits.shape == (10, 20)
    with pytest.raises(ValueError):
        rotate_quarter(Raster.empty(), 45)


def test_small_rotation():
    x = create_block(80, 80, 40, 40)

    assert rotate_small(x, 0.0) is x
    assert abs(rotate_small(x, 3.0).area_px - x.area_px) <= 0.02 * x.area_px
    with pytest.raises(ValueError):
        rotate_small(x, 12.0)


def test_augment_yields_seven_consistent_samples():
    sample = _create_sample()

    variants = augment(sample, RngStream(1))

    assert len(variants) == 7
    assert variants[0] is sample
    assert [v.sample_id for v in variants[1:3]] == ["000000-full-flipv", "000000-full-fliph"]
    assert [v.sample_id for v in variants[3:]] == [f"000000-full-rot{i}" for i in range(4)]
    assert isinstance(variants[0].meta.augmentation, Original)
    assert isinstance(variants[1].meta.augmentation, FlipV)
    assert isinstance(variants[2].meta.augmentation, FlipH)
    assert all(v.meta.source_id == sample.sample_id for v in variants[1:])
    assert variants[1].inlet == flip_v(sample.inlet)
    assert variants[1].over_mask == flip_v(sample.over_mask)


def test_augment_preserves_channel_areas():
    sample = _create_sample()

    variants = augment(sample, RngStream(2))

    for flipped in variants[1:3]:
        for before, after in zip(sample.channels, flipped.channels, strict=True):
            assert after.area_px == before.area_px
    for rotated in variants[3:]:
        tag = rotated.meta.augmentation
        assert isinstance(tag, Rotation)
        assert -3.0 <= tag.angle_deg <= 3.0
        for before, after in zip(sample.channels, rotated.channels, strict=True):
            assert abs(after.area_px - before.area_px) <= 0.02 * before.area_px


def test_augment_is_deterministic_per_stream():
    sample = _create_sample()

    first = [v.meta for v in augment(sample, RngStream(5, 9))]
    second = [v.meta for v in augment(sample, RngStream(5, 9))]

    assert first == second
    assert all(isinstance(m.augmentation, Rotation) for m in first[3:])
