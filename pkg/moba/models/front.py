"""
Analytic and sampled true Pareto fronts of the two-objective benchmarks.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np


class FrontKind(str, Enum):
    CLOSED_FORM = "closed_form"
    SAMPLED = "sampled"


@dataclass(frozen=True, eq=False)
class TrueFront:
    kind: FrontKind
    evaluator: Optional[Callable[[np.ndarray], np.ndarray]] = None
    points: Optional[np.ndarray] = None
    f1_domain: tuple = (0.0, 1.0)

    @classmethod
    def closed_form(cls, evaluator: Callable[[np.ndarray], np.ndarray]) -> "TrueFront":
        return cls(FrontKind.CLOSED_FORM, evaluator=evaluator)

    @classmethod
    def sampled(cls, points: np.ndarray) -> "TrueFront":
        return cls(FrontKind.SAMPLED, points=np.asarray(points, dtype=float))

    def f2(self, f1) -> np.ndarray:
        """True f2 at f1 (closed form); f1 is projected onto the domain first."""
        if self.evaluator is None:
            raise ValueError("sampled fronts have no closed form")
        low, high = self.f1_domain
        return self.evaluator(np.clip(np.asarray(f1, dtype=float), low, high))


def convex_front(f1: np.ndarray) -> np.ndarray:
    """f2 = 1 - sqrt(f1)."""
    return 1.0 - np.sqrt(f1)


def concave_front(f1: np.ndarray) -> np.ndarray:
    """f2 = 1 - f1^2."""
    return 1.0 - f1**2
