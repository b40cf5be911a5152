"""
Seeded random streams.

One stream is owned by one run; parallel weight-runs get their own stream via
``derive`` so results never depend on how runs are scheduled.
"""

from typing import Optional, Tuple, Union

import numpy as np

_MASK64 = (1 << 64) - 1

Size = Optional[Union[int, Tuple[int, ...]]]


def splitmix64(value: int) -> int:
    """Finalizer of the SplitMix64 generator, used to mix (restart, run) keys."""
    z = (value + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, restart: int, run: int) -> int:
    """seed XOR splitmix64((restart << 32) | run), masked to 64 bits."""
    key = ((restart & 0xFFFFFFFF) << 32) | (run & 0xFFFFFFFF)
    return (seed ^ splitmix64(key)) & _MASK64


class RngStream:
    """Single-owner random stream backed by numpy's PCG64."""

    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be an unsigned integer")
        self.seed = int(seed) & _MASK64
        self._generator = np.random.Generator(np.random.PCG64(self.seed))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed})"

    def random(self, size: Size = None):
        """Uniform draws in [0, 1)."""
        return self._generator.random(size)

    def uniform(self, low, high, size: Size = None):
        """Uniform draws in [low, high]."""
        return low + (high - low) * self._generator.random(size)

    def symmetric_unit(self, size: Size = None):
        """Uniform draws in [-1, 1]."""
        return 2.0 * self._generator.random(size) - 1.0

    def open_unit(self, size: Size = None):
        """Uniform draws in (0, 1); exact zeros are redrawn."""
        draws = np.asarray(self._generator.random(size), dtype=float)
        zeros = draws == 0.0
        while np.any(zeros):
            draws[zeros] = self._generator.random(int(zeros.sum()))
            zeros = draws == 0.0
        return draws

    def derive(self, restart: int, run: int) -> "RngStream":
        """Independent stream for weight-run ``run`` of restart ``restart``."""
        return RngStream(derive_seed(self.seed, restart, run))
