"""Seeded pseudo-random primitives shared by every randomized stage.

All randomness in this project flows through splitmix64, so any run is
reproducible from its integer seed alone, on any platform. The generator
is counter-based: the i-th output (1-based) equals
``mix64((seed + i * GOLDEN) mod 2**64)``, which also allows bulk
evaluation of arbitrary stream positions.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 output scrambler for one 64-bit state value."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def mix64_array(z: np.ndarray) -> np.ndarray:
    """Vectorized :func:`mix64` over a uint64 array (wrapping arithmetic)."""
    z = z.astype(np.uint64, copy=True)
    z ^= z >> np.uint64(30)
    z *= np.uint64(0xBF58476D1CE4E5B9)
    z ^= z >> np.uint64(27)
    z *= np.uint64(0x94D049BB133111EB)
    z ^= z >> np.uint64(31)
    return z


class SplitMix64:
    """splitmix64 generator; identical seeds yield identical streams."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def randbelow(self, n: int) -> int:
        """Uniform-ish draw in [0, n) via modulo selection.

        The modulo bias is negligible for n far below 2**64 and is accepted
        in exchange for bit-exact reproducibility.
        """
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_u64() % n


def stream_outputs(seed: int, positions: np.ndarray) -> np.ndarray:
    """Outputs of SplitMix64(seed) at the given 1-based draw positions."""
    pos = positions.astype(np.uint64, copy=False)
    return mix64_array(np.uint64(seed & MASK64) + pos * np.uint64(GOLDEN))
