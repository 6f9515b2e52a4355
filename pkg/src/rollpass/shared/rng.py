from typing import Self, final

import numpy as np
from numpy.typing import NDArray

_U64 = (1 << 64) - 1


@final
class RngStream:
    """
    A counter-based random stream. Philox4x64 keyed by (stream_id, seed): the same
    (seed, stream_id) pair replays the same draw sequence on every platform, and
    distinct stream ids share no state.

    Not thread safe. Hand one stream to each worker (see `child`).
    """

    def __init__(self, seed: int, stream_id: int = 0):
        if not (0 <= seed <= _U64 and 0 <= stream_id <= _U64):
            raise ValueError("seed and stream_id must be unsigned 64-bit integers")
        self.seed = seed
        self.stream_id = stream_id
        self._bit_generator = np.random.Philox(key=(stream_id << 64) | seed)
        self._generator = np.random.Generator(self._bit_generator)

    def child(self, stream_id: int) -> Self:
        """A fresh stream on the same seed; does not consume draws from this one."""
        return type(self)(self.seed, stream_id)

    @property
    def counter(self) -> int:
        state = self._bit_generator.state["state"]  # pyright: ignore[reportAny]
        words: NDArray[np.uint64] = state["counter"]  # pyright: ignore[reportAny]
        return sum(int(word) << (64 * i) for i, word in enumerate(words))

    def uniform(self, low: float, high: float, size: int) -> NDArray[np.float64]:
        return self._generator.uniform(low, high, size)

    def uniform_scalar(self, low: float, high: float) -> float:
        return float(self._generator.uniform(low, high))

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in [low, high)."""
        return int(self._generator.integers(low, high))

    def raw_u64(self, size: int) -> NDArray[np.uint64]:
        return self._generator.integers(0, _U64, size, dtype=np.uint64, endpoint=True)

    def permutation(self, n: int) -> NDArray[np.int64]:
        return self._generator.permutation(n)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id}, counter={self.counter})"
