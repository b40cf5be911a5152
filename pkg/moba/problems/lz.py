"""
LZ4: two objectives whose Pareto set is the curve x_j = sin(6 pi x1 + j pi / d).
"""

import numpy as np

from moba.core.bounds import BoundsBox
from moba.core.exceptions import ValidationException
from moba.models.front import TrueFront, concave_front
from moba.models.problem import Problem

DEFAULT_DIMENSION = 30


def h(v) -> np.ndarray:
    """|v| / (1 + exp(2|v|))."""
    a = np.abs(np.asarray(v, dtype=float))
    # exp overflows to inf for large |v|, giving the correct limit 0
    with np.errstate(over="ignore"):
        return a / (1.0 + np.exp(2.0 * a))


def _index_sets(d: int):
    # 1-based variable indices j = 2..d
    j = np.arange(2, d + 1)
    return j[j % 2 == 1], j[j % 2 == 0]


def lz4(x) -> np.ndarray:
    X = np.atleast_2d(np.asarray(x, dtype=float))
    d = X.shape[1]
    x1 = X[:, 0]
    j_odd, j_even = _index_sets(d)
    j = np.arange(2, d + 1)
    u = X[:, 1:] - np.sin(6.0 * np.pi * x1[:, None] + j[None, :] * np.pi / d)
    hu = h(u)
    odd_mask = (j % 2 == 1)[None, :]
    f1 = x1 + 2.0 / len(j_odd) * np.sum(np.where(odd_mask, hu, 0.0), axis=1)
    f2 = 1.0 - x1**2 + 2.0 / len(j_even) * np.sum(np.where(~odd_mask, hu, 0.0), axis=1)
    Y = np.column_stack([f1, f2])
    return Y[0] if np.ndim(x) == 1 else Y


def pareto_set_point(x1: float, dimension: int = DEFAULT_DIMENSION) -> np.ndarray:
    """Decision vector on the Pareto set for a given x1."""
    j = np.arange(2, dimension + 1)
    return np.concatenate([[x1], np.sin(6.0 * np.pi * x1 + j * np.pi / dimension)])


def make_lz4(dimension: int = DEFAULT_DIMENSION) -> Problem:
    if dimension < 3:
        raise ValidationException("LZ4 needs at least 3 variables", {"dimension": dimension})
    lower = np.full(dimension, -2.0)
    upper = np.full(dimension, 2.0)
    lower[0], upper[0] = 0.0, 1.0
    return Problem(
        name="lz4",
        dimension=dimension,
        num_objectives=2,
        bounds=BoundsBox(lower, upper),
        objectives=lz4,
        true_front=TrueFront.closed_form(concave_front),
    )
