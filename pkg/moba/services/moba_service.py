"""
Multiobjective bat algorithm: one weighted-sum bat run per Pareto point.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from moba.core.exceptions import ContractViolationException
from moba.core.logging_config import get_logger
from moba.core.random import RngStream
from moba.models.archive import ParetoArchive
from moba.models.problem import Problem
from moba.models.trace import ConvergenceTrace
from moba.problems.penalty import penalized_objective
from moba.schemas.params import BatParams, MobaOptions
from moba.services.bat_engine import run_swarm
from moba.services.metrics_service import MetricsService
from moba.services.pareto import archive_insert, merge_archives, sample_weights
from moba.tasks.weight_run_tasks import WeightRunTask, execute_tasks

logger = get_logger(__name__)


@dataclass
class WeightRunResult:
    """Outcome of one weight vector's bat run."""

    restart: int
    run: int
    weights: np.ndarray
    decision: np.ndarray
    objectives: np.ndarray
    feasible: bool
    trace: ConvergenceTrace
    nan_evaluations: int = 0
    checkpoints: Dict[int, np.ndarray] = field(default_factory=dict)
    improvements: List[np.ndarray] = field(default_factory=list)


@dataclass
class MobaResult:
    archive: ParetoArchive
    traces: List[ConvergenceTrace]
    checkpoint_archives: Dict[int, ParetoArchive] = field(default_factory=dict)
    checkpoint_best: Dict[int, float] = field(default_factory=dict)
    infeasible_discards: int = 0
    nan_evaluations: int = 0
    runs: List[WeightRunResult] = field(default_factory=list)

    def __iter__(self):
        # unpacks as (archive, traces)
        return iter((self.archive, self.traces))


class MobaService:
    """Weighted-sum bat runs for one problem, parameter set and option set."""

    def __init__(self, problem: Problem, params: BatParams, options: MobaOptions = MobaOptions()):
        self.problem = problem
        self.params = params
        self.options = options

    def run_weight(self, rng: RngStream, restart: int, run: int) -> WeightRunResult:
        """Draw a weight vector and minimise the penalised weighted sum."""
        problem, options = self.problem, self.options
        weights = sample_weights(problem.num_objectives, rng)
        objective = penalized_objective(problem, weights, options.penalty)
        checkpoints: Dict[int, np.ndarray] = {}

        on_checkpoint = None
        if problem.true_front is not None:

            def on_checkpoint(iteration: int, x: np.ndarray) -> Optional[float]:
                checkpoints[iteration] = x.copy()
                return MetricsService.front_error(problem.evaluate(x), problem.true_front)

        swarm = run_swarm(
            objective,
            self.params,
            rng,
            on_checkpoint=on_checkpoint,
            checkpoint_every=options.trace_every,
            track_improvements=options.archive_improvements,
        )
        decision = swarm.population.best_position.copy()
        return WeightRunResult(
            restart=restart,
            run=run,
            weights=weights.weights.copy(),
            decision=decision,
            objectives=problem.evaluate(decision),
            feasible=bool(problem.is_feasible(decision, options.constraint_tolerance)),
            trace=swarm.trace,
            nan_evaluations=swarm.population.nan_evaluations,
            checkpoints=checkpoints,
            improvements=[x for _, x in swarm.improvements],
        )

    def collect_runs(self, runs: List[WeightRunResult]) -> MobaResult:
        """Insert run results in (restart, run) order."""
        problem, options = self.problem, self.options
        runs = sorted(runs, key=lambda r: (r.restart, r.run))
        archive = ParetoArchive.empty()
        discards = 0
        for result in runs:
            if not result.feasible:
                discards += 1
                logger.debug(
                    "Discarding infeasible point",
                    restart=result.restart,
                    run=result.run,
                    violation=float(problem.violation(result.decision)),
                )
                continue
            if options.archive_improvements:
                for x in result.improvements:
                    if problem.is_feasible(x, options.constraint_tolerance):
                        archive = archive_insert(archive, x, problem.evaluate(x))
            archive = archive_insert(archive, result.decision, result.objectives)

        checkpoint_archives: Dict[int, ParetoArchive] = {}
        checkpoint_best: Dict[int, float] = {}
        iterations = sorted({t for r in runs for t in r.checkpoints})
        for t in iterations:
            snapshot = ParetoArchive.empty()
            for result in runs:
                x = result.checkpoints.get(t)
                if x is not None and problem.is_feasible(x, options.constraint_tolerance):
                    snapshot = archive_insert(snapshot, x, problem.evaluate(x))
            checkpoint_archives[t] = snapshot
            checkpoint_best[t] = float(sum(r.trace.at(t).best_scalar for r in runs))

        return MobaResult(
            archive=archive,
            traces=[r.trace for r in runs],
            checkpoint_archives=checkpoint_archives,
            checkpoint_best=checkpoint_best,
            infeasible_discards=discards,
            nan_evaluations=sum(r.nan_evaluations for r in runs),
            runs=runs,
        )

    def run(self, n_points: int, rng: RngStream, restart: int = 0) -> MobaResult:
        """Approximate the Pareto front with ``n_points`` weighted-sum runs."""
        problem = self.problem
        if n_points < 1:
            raise ContractViolationException("n_points must be at least 1", {"n_points": n_points})
        if problem.num_objectives < 2:
            raise ContractViolationException(
                "multiobjective runs need at least two objectives",
                {"objectives": problem.num_objectives},
            )

        tasks = [
            WeightRunTask(
                problem, self.params, rng.derive(restart, j).seed, restart, j, self.options
            )
            for j in range(n_points)
        ]
        result = self.collect_runs(execute_tasks(tasks, self.options.workers))
        logger.info(
            "MOBA restart finished",
            problem=problem.name,
            restart=restart,
            points=n_points,
            archive_size=result.archive.size,
            infeasible_discards=result.infeasible_discards,
        )
        return result

    @staticmethod
    def merge(results: List[MobaResult]) -> MobaResult:
        """Combine restarts: merged archive, merged checkpoint archives, summed diagnostics."""
        iterations = sorted({t for r in results for t in r.checkpoint_archives})
        return MobaResult(
            archive=merge_archives(r.archive for r in results),
            traces=[trace for r in results for trace in r.traces],
            checkpoint_archives={
                t: merge_archives(
                    r.checkpoint_archives[t] for r in results if t in r.checkpoint_archives
                )
                for t in iterations
            },
            checkpoint_best={
                t: float(sum(r.checkpoint_best.get(t, 0.0) for r in results))
                for t in iterations
            },
            infeasible_discards=sum(r.infeasible_discards for r in results),
            nan_evaluations=sum(r.nan_evaluations for r in results),
            runs=[run for r in results for run in r.runs],
        )


def run_moba(
    problem: Problem,
    p: BatParams,
    n_points: int,
    rng: RngStream,
    restart: int = 0,
    options: MobaOptions = MobaOptions(),
) -> MobaResult:
    return MobaService(problem, p, options).run(n_points, rng, restart)
