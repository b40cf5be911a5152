"""
Front error against analytic or sampled true fronts, and convergence traces.
"""

from typing import Mapping, Optional

import numpy as np

from moba.core.exceptions import ContractViolationException
from moba.models.archive import ParetoArchive
from moba.models.front import FrontKind, TrueFront
from moba.models.trace import ConvergenceTrace
from moba.problems.zdt import zdt3_front_curve
from moba.services.pareto import pareto_filter

MIN_ZDT3_SAMPLES = 10_000


def _objectives(estimated) -> np.ndarray:
    if isinstance(estimated, ParetoArchive):
        return estimated.objectives
    return np.atleast_2d(np.asarray(estimated, dtype=float))


class MetricsService:
    @staticmethod
    def squared_residuals(objectives: np.ndarray, front: TrueFront) -> np.ndarray:
        """Per-point squared distance to the true front."""
        F = np.atleast_2d(np.asarray(objectives, dtype=float))
        if F.shape[1] != 2:
            raise ContractViolationException(
                "front error is defined for two objectives", {"objectives": F.shape[1]}
            )
        if front.kind == FrontKind.CLOSED_FORM:
            return (F[:, 1] - front.f2(F[:, 0])) ** 2

        points = front.points
        residuals = np.empty(F.shape[0])
        for i, row in enumerate(F):
            residuals[i] = np.min(np.sum((points - row) ** 2, axis=1))
        return residuals

    @staticmethod
    def front_error(estimated, front: TrueFront) -> Optional[float]:
        """Raw front error: sum of squared residuals. None for an empty archive."""
        F = _objectives(estimated)
        if F.size == 0:
            return None
        return float(np.sum(MetricsService.squared_residuals(F, front)))

    @staticmethod
    def front_error_per_point(estimated, front: TrueFront) -> Optional[float]:
        F = _objectives(estimated)
        raw = MetricsService.front_error(F, front)
        return None if raw is None else raw / F.shape[0]

    @staticmethod
    def build_zdt3_front(samples: int = MIN_ZDT3_SAMPLES) -> TrueFront:
        """Non-dominated subset of the ZDT3 curve on a uniform f1 grid over [0, 1]."""
        if samples < MIN_ZDT3_SAMPLES:
            raise ContractViolationException(
                "ZDT3 front needs a dense sample", {"samples": samples}
            )
        f1 = np.linspace(0.0, 1.0, samples)
        F = np.column_stack([f1, zdt3_front_curve(f1)])
        return TrueFront.sampled(F[pareto_filter(F)])

    @staticmethod
    def record_trace_point(
        trace: ConvergenceTrace,
        iteration: int,
        best: float,
        archive: Optional[ParetoArchive] = None,
        front: Optional[TrueFront] = None,
    ) -> ConvergenceTrace:
        error = None
        if archive is not None and front is not None:
            error = MetricsService.front_error(archive, front)
        return trace.append(iteration, best, error)

    @staticmethod
    def front_error_trace(
        checkpoint_archives: Mapping[int, ParetoArchive],
        front: TrueFront,
        best_scalars: Optional[Mapping[int, float]] = None,
    ) -> ConvergenceTrace:
        """Front error of the archive known at each checkpoint iteration.

        ``best_scalars`` (for example the summed run bests) fills the best column;
        without it the per-point error is used.
        """
        trace = ConvergenceTrace()
        for iteration in sorted(checkpoint_archives):
            archive = checkpoint_archives[iteration]
            if best_scalars is not None:
                best = best_scalars[iteration]
            else:
                best = MetricsService.front_error_per_point(archive, front)
                best = np.nan if best is None else best
            MetricsService.record_trace_point(trace, iteration, best, archive, front)
        return trace

