"""
Problem definitions: batched objectives, inequality constraints, box bounds.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np

from moba.core.bounds import BoundsBox, check_dimensions
from moba.models.front import TrueFront

BatchFunction = Callable[[np.ndarray], np.ndarray]


def _as_batch(x) -> np.ndarray:
    return np.atleast_2d(np.asarray(x, dtype=float))


@dataclass(frozen=True, eq=False)
class Problem:
    """A K-objective minimisation problem.

    ``objectives`` maps an (n, d) batch to (n, K); ``constraints`` maps it to
    (n, m) values that are <= 0 when feasible, or is None for unconstrained
    problems. ``objective_scale`` divides the objectives before they are
    weighted; the archive keeps the raw values.
    """

    name: str
    dimension: int
    num_objectives: int
    bounds: BoundsBox
    objectives: BatchFunction
    constraints: Optional[BatchFunction] = None
    num_constraints: int = 0
    true_front: Optional[TrueFront] = field(default=None)
    objective_scale: Optional[Tuple[float, ...]] = None

    def evaluate(self, x) -> np.ndarray:
        """Objective vectors; a single vector gives a single row back."""
        batch = _as_batch(x)
        check_dimensions(batch, self.bounds.lower, "point and problem")
        values = self.objectives(batch)
        return values[0] if np.ndim(x) == 1 else values

    def scale_objectives(self, F) -> np.ndarray:
        F = np.asarray(F, dtype=float)
        if self.objective_scale is None:
            return F
        return F / np.asarray(self.objective_scale, dtype=float)

    def constraint_values(self, x) -> np.ndarray:
        batch = _as_batch(x)
        check_dimensions(batch, self.bounds.lower, "point and problem")
        if self.constraints is None:
            values = np.zeros((batch.shape[0], 0))
        else:
            values = self.constraints(batch)
        return values[0] if np.ndim(x) == 1 else values

    def violation(self, x) -> np.ndarray:
        """Sum of positive constraint parts."""
        g = np.atleast_2d(self.constraint_values(_as_batch(x)))
        total = np.sum(np.maximum(0.0, g), axis=1)
        return total[0] if np.ndim(x) == 1 else total

    def is_feasible(self, x, tol: float = 1e-6):
        g = np.atleast_2d(self.constraint_values(_as_batch(x)))
        feasible = np.all(g <= tol, axis=1)
        return bool(feasible[0]) if np.ndim(x) == 1 else feasible

    @property
    def constrained(self) -> bool:
        return self.constraints is not None


@dataclass(frozen=True, eq=False)
class ScalarObjective:
    """Scalar function minimised by the bat engine."""

    evaluate: BatchFunction
    bounds: BoundsBox

    @property
    def dimension(self) -> int:
        return self.bounds.dimension

    def __call__(self, x) -> np.ndarray:
        values = np.asarray(self.evaluate(_as_batch(x)), dtype=float).reshape(-1)
        return values[0] if np.ndim(x) == 1 else values
