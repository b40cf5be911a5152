"""
Static quadratic exterior penalty.
"""

import numpy as np

from moba.core.config import settings
from moba.models.archive import WeightVector
from moba.models.problem import Problem, ScalarObjective
from moba.services.pareto import scalarize


def penalty_term(problem: Problem, X, penalty: float) -> np.ndarray:
    """penalty * sum_j max(0, g_j)^2 per row."""
    if not problem.constrained:
        return np.zeros(np.atleast_2d(X).shape[0])
    g = np.atleast_2d(problem.constraint_values(np.atleast_2d(X)))
    return penalty * np.sum(np.maximum(0.0, g) ** 2, axis=1)


def penalized_scalar(
    problem: Problem, x, w: WeightVector, penalty: float = settings.penalty
):
    """scalarize(f(x), w) on scaled objectives plus the penalty; a single vector gives a float."""
    if penalty < 0:
        raise ValueError("penalty must be nonnegative")
    X = np.atleast_2d(np.asarray(x, dtype=float))
    F = problem.scale_objectives(problem.evaluate(X))
    values = scalarize(F, w) + penalty_term(problem, X, penalty)
    return float(values[0]) if np.ndim(x) == 1 else values


def penalized_objective(
    problem: Problem, w: WeightVector, penalty: float = settings.penalty
) -> ScalarObjective:
    return ScalarObjective(
        evaluate=lambda X: penalized_scalar(problem, X, w, penalty),
        bounds=problem.bounds,
    )
