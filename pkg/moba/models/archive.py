"""
Weight vectors and the non-dominated archive.
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from moba.core.exceptions import ContractViolationException

WEIGHT_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class WeightVector:
    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float).reshape(-1)
        if w.size == 0 or np.any(w < 0) or abs(w.sum() - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise ContractViolationException(
                "weights must be nonnegative and sum to 1",
                details={"weights": w.tolist()},
            )
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return int(self.weights.size)


class ParetoArchive:
    """Mutually non-dominated (decision, objectives) pairs.

    Rows are kept in insertion order. Instances are treated as values; the
    archive operations return new archives.
    """

    def __init__(self, decisions=None, objectives=None):
        if decisions is None or objectives is None:
            self.decisions = np.empty((0, 0))
            self.objectives = np.empty((0, 0))
        else:
            self.decisions = np.atleast_2d(np.asarray(decisions, dtype=float))
            self.objectives = np.atleast_2d(np.asarray(objectives, dtype=float))
            if self.decisions.shape[0] != self.objectives.shape[0]:
                raise ContractViolationException(
                    "decision and objective rows differ in count"
                )

    @classmethod
    def empty(cls) -> "ParetoArchive":
        return cls()

    @property
    def size(self) -> int:
        return int(self.objectives.shape[0])

    @property
    def num_objectives(self) -> int:
        return int(self.objectives.shape[1]) if self.size else 0

    def entries(self) -> List[Tuple[np.ndarray, np.ndarray]]:
        return [(self.decisions[i], self.objectives[i]) for i in range(self.size)]

    def objective_set(self) -> set:
        """Objective vectors as a set of tuples, for order-free comparison."""
        return {tuple(row) for row in self.objectives.tolist()}

    def sorted_by_first_objective(self) -> "ParetoArchive":
        if not self.size:
            return self
        order = np.lexsort(self.objectives.T[::-1])
        return ParetoArchive(self.decisions[order], self.objectives[order])

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
        return iter(self.entries())

    def __repr__(self) -> str:
        return f"ParetoArchive(size={self.size}, objectives={self.num_objectives})"
