from collections.abc import Callable, Sequence
from functools import partial

import anyio
import psutil
from anyio import CapacityLimiter, create_task_group, to_thread


def default_jobs() -> int:
    return psutil.cpu_count(logical=True) or 1


def parallel_map[T, R](
    fn: Callable[[T], R], items: Sequence[T], jobs: int | None = None
) -> list[R]:
    """
    Apply `fn` to every item on at most `jobs` worker threads. Results come back in input order,
    so callers stay deterministic whatever the scheduling.

    The first failure cancels the remaining items and is re-raised unwrapped from anyio's
    ExceptionGroup, so callers handle the same exception types as with jobs=1.

    `fn` must be pure: every caller draws its random numbers before fanning out.
    """
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    try:
        return anyio.run(partial(_parallel_map, fn, items, jobs))
    except ExceptionGroup as group:
        raise _first_leaf(group) from None


def _first_leaf(group: BaseExceptionGroup[BaseException]) -> BaseException:
    first = group.exceptions[0]
    if isinstance(first, BaseExceptionGroup):
        return _first_leaf(first)  # pyright: ignore[reportUnknownArgumentType]
    return first


async def _parallel_map[T, R](
    fn: Callable[[T], R], items: Sequence[T], jobs: int
) -> list[R]:
    limiter = CapacityLimiter(jobs)
    results: dict[int, R] = {}

    async def _run(index: int, item: T) -> None:
        results[index] = await to_thread.run_sync(fn, item, limiter=limiter)

    async with create_task_group() as tg:
        for index, item in enumerate(items):
            tg.start_soon(_run, index, item)

    return [results[index] for index in range(len(items))]
