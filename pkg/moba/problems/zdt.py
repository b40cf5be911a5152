"""
ZDT1, ZDT2 and ZDT3: scalable two-objective problems on [0, 1]^d.

ZDT2 uses the standard form f2 = g (1 - (f1/g)^2), whose front is the
non-convex curve f2 = 1 - f1^2.
"""

from typing import Optional

import numpy as np

from moba.core.bounds import BoundsBox
from moba.models.front import TrueFront, concave_front, convex_front
from moba.models.problem import Problem

DEFAULT_DIMENSION = 30


def _batch(x) -> np.ndarray:
    return np.atleast_2d(np.asarray(x, dtype=float))


def _g(X: np.ndarray) -> np.ndarray:
    d = X.shape[1]
    if d == 1:
        return np.ones(X.shape[0])
    return 1.0 + 9.0 * np.sum(X[:, 1:], axis=1) / (d - 1)


def _shape_like(x, Y: np.ndarray) -> np.ndarray:
    return Y[0] if np.ndim(x) == 1 else Y


def zdt1(x) -> np.ndarray:
    X = _batch(x)
    f1 = X[:, 0]
    g = _g(X)
    f2 = g * (1.0 - np.sqrt(f1 / g))
    return _shape_like(x, np.column_stack([f1, f2]))


def zdt2(x) -> np.ndarray:
    X = _batch(x)
    f1 = X[:, 0]
    g = _g(X)
    f2 = g * (1.0 - (f1 / g) ** 2)
    return _shape_like(x, np.column_stack([f1, f2]))


def zdt3(x) -> np.ndarray:
    X = _batch(x)
    f1 = X[:, 0]
    g = _g(X)
    ratio = f1 / g
    f2 = g * (1.0 - np.sqrt(ratio) - ratio * np.sin(10.0 * np.pi * f1))
    return _shape_like(x, np.column_stack([f1, f2]))


def zdt3_front_curve(f1) -> np.ndarray:
    """f2 = 1 - sqrt(f1) - f1 sin(10 pi f1), before dominance filtering."""
    f1 = np.asarray(f1, dtype=float)
    return 1.0 - np.sqrt(f1) - f1 * np.sin(10.0 * np.pi * f1)


def make_zdt1(dimension: int = DEFAULT_DIMENSION) -> Problem:
    return Problem(
        name="zdt1",
        dimension=dimension,
        num_objectives=2,
        bounds=BoundsBox.uniform(0.0, 1.0, dimension),
        objectives=zdt1,
        true_front=TrueFront.closed_form(convex_front),
    )


def make_zdt2(dimension: int = DEFAULT_DIMENSION) -> Problem:
    return Problem(
        name="zdt2",
        dimension=dimension,
        num_objectives=2,
        bounds=BoundsBox.uniform(0.0, 1.0, dimension),
        objectives=zdt2,
        true_front=TrueFront.closed_form(concave_front),
    )


def make_zdt3(dimension: int = DEFAULT_DIMENSION, front: Optional[TrueFront] = None) -> Problem:
    return Problem(
        name="zdt3",
        dimension=dimension,
        num_objectives=2,
        bounds=BoundsBox.uniform(0.0, 1.0, dimension),
        objectives=zdt3,
        true_front=front,
    )
