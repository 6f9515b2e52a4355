import pytest

from rollpass.raster.morphology import dilate, disk_kernel
from rollpass.raster.raster import Raster, is_subset
from rollpass.raster.tests.conftest import create_centre_pixel, create_random_raster
from rollpass.raster.transforms import flip_h, flip_v


@pytest.mark.parametrize("k, expected", [(1, 1), (2, 5), (3, 9), (4, 13)])
def test_single_pixel_dilation_sizes(k: int, expected: int):
    assert dilate(create_centre_pixel(), k).area_px == expected
    assert int(disk_kernel(k).sum()) == expected


def test_dilating_nothing_gives_nothing():
    assert dilate(Raster.empty(), 5).is_empty


def test_kernel_diameter_must_be_positive():
    with pytest.raises(ValueError):
        disk_kernel(0)


def test_border_pixels_clip_at_the_frame():
    corner = Raster.from_pixels([(0, 0)])

    assert dilate(corner, 3).area_px == 4


def test_dilation_is_extensive_increasing_and_commutes_with_flips():
    x = create_random_raster(7, density=0.01)

    grown = [dilate(x, k) for k in range(1, 9)]

    assert all(is_subset(x, g) for g in grown)
    assert all(is_subset(a, b) for a, b in zip(grown, grown[1:], strict=False))
    assert dilate(flip_h(x), 4) == flip_h(dilate(x, 4))
    assert dilate(flip_v(x), 5) == flip_v(dilate(x, 5))
