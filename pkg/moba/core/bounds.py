"""
Real vectors and box bounds.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from moba.core.exceptions import ContractViolationException
from moba.core.random import RngStream


def as_real_vector(values, name: str = "vector") -> np.ndarray:
    """Validate and convert to a 1-D float64 array of finite components."""
    vec = np.array(values, dtype=float).reshape(-1)
    if vec.size == 0:
        raise ContractViolationException(f"{name} must have dimension > 0")
    if not np.all(np.isfinite(vec)):
        raise ContractViolationException(
            f"{name} has non-finite components", details={"values": vec.tolist()}
        )
    return vec


def check_dimensions(a: np.ndarray, b: np.ndarray, what: str = "vectors") -> None:
    """Raise when the trailing dimensions of two arrays differ."""
    la = np.shape(a)[-1] if np.ndim(a) else 1
    lb = np.shape(b)[-1] if np.ndim(b) else 1
    if la != lb:
        raise ContractViolationException(
            f"Dimension mismatch between {what}",
            details={"left": int(la), "right": int(lb)},
        )


@dataclass(frozen=True, eq=False)
class BoundsBox:
    """Axis-aligned box lower[i] < upper[i]."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = as_real_vector(self.lower, "lower bound")
        upper = as_real_vector(self.upper, "upper bound")
        check_dimensions(lower, upper, "lower and upper bounds")
        if not np.all(lower < upper):
            raise ContractViolationException(
                "lower bound must be strictly below upper bound",
                details={"lower": lower.tolist(), "upper": upper.tolist()},
            )
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low: float, high: float, dimension: int) -> "BoundsBox":
        return cls(np.full(dimension, low), np.full(dimension, high))

    @property
    def dimension(self) -> int:
        return int(self.lower.size)

    def contains(self, x: np.ndarray) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all((x >= self.lower) & (x <= self.upper)))


def clamp_to_bounds(x, b: BoundsBox) -> np.ndarray:
    """Project onto the box faces componentwise. Works on a vector or an (n, d) batch."""
    x = np.asarray(x, dtype=float)
    check_dimensions(x, b.lower, "point and bounds")
    return np.minimum(b.upper, np.maximum(b.lower, x))


def uniform_in_box(b: BoundsBox, rng: RngStream, count: Optional[int] = None) -> np.ndarray:
    """Independent uniform draws in [lower[i], upper[i]]; ``count`` rows if given."""
    size = b.dimension if count is None else (count, b.dimension)
    return b.lower + (b.upper - b.lower) * rng.random(size)
