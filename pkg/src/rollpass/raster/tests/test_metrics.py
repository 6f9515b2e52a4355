import pytest

from rollpass.raster.metrics import area_error, jaccard
from rollpass.raster.raster import Raster
from rollpass.raster.tests.conftest import create_block, create_random_raster
from rollpass.shared.errors import BothEmpty, EmptyReference


def test_jaccard_identity_and_disjoint():
    block = create_block(50, 50, 10, 10)

    assert jaccard(block, block) == 1.0
    assert jaccard(block, create_block(120, 120, 5, 5)) == 0.0


def test_hand_counted_shifted_block():
    a = create_block(100, 100, 2, 2)
    b = create_block(100, 101, 2, 2)

    assert jaccard(a, b) == pytest.approx(1 / 3)
    assert area_error(a, b) == pytest.approx(1.0)


def test_jaccard_of_two_empty_rasters_is_an_error():
    with pytest.raises(BothEmpty):
        jaccard(Raster.empty(), Raster.empty())


def test_area_error_cases():
    real = create_block(30, 30, 20, 20)

    assert area_error(real, real) == 0.0
    assert area_error(Raster.empty(), real) == 1.0
    with pytest.raises(EmptyReference):
        area_error(real, Raster.empty())


def test_jaccard_is_symmetric():
    a, b = create_random_raster(1), create_random_raster(2)

    assert jaccard(a, b) == jaccard(b, a)


def test_jaccard_distance_triangle_inequality():
    for seed in range(0, 300, 3):
        a, b, c = (create_random_raster(seed + i, density=0.05 + 0.1 * i) for i in range(3))

        assert 1 - jaccard(a, c) <= (1 - jaccard(a, b)) + (1 - jaccard(b, c)) + 1e-12
