import time

import pytest

from rollpass.utils.pool import default_jobs, parallel_map


def test_results_keep_input_order():
    def slow_square(x: int) -> int:
        time.sleep(0.001 * (10 - x))
        return x * x

    assert parallel_map(slow_square, list(range(10)), jobs=4) == [x * x for x in range(10)]


def test_sequential_and_parallel_agree():
    items = list(range(25))

    assert parallel_map(str, items, jobs=1) == parallel_map(str, items, jobs=8)


def test_worker_errors_surface_unwrapped():
    def fail_on_three(x: int) -> int:
        if x == 3:
            raise KeyError(x)
        return x

    with pytest.raises(KeyError):
        parallel_map(fail_on_three, list(range(6)), jobs=3)


def test_empty_input():
    assert parallel_map(str, [], jobs=4) == []


def test_default_jobs_is_positive():
    assert default_jobs() >= 1
