"""Sphere function sum x_i^2 on [-5, 5]^d."""

import numpy as np

from moba.core.bounds import BoundsBox
from moba.models.problem import ScalarObjective


def sphere_values(X: np.ndarray) -> np.ndarray:
    return np.sum(np.atleast_2d(X) ** 2, axis=1)


def sphere(dimension: int, radius: float = 5.0) -> ScalarObjective:
    return ScalarObjective(
        evaluate=sphere_values, bounds=BoundsBox.uniform(-radius, radius, dimension)
    )
