"""
Multi-run experiments: parameter sweeps and front error at fixed horizons.
"""

from math import gcd
from typing import Any, Callable, Dict, List, Union

import numpy as np
import pandas as pd

from moba.core.exceptions import (
    EXIT_OK,
    BenchmarkException,
    MobaException,
    ValidationException,
)
from moba.core.logging_config import get_logger
from moba.core.random import RngStream
from moba.models.archive import ParetoArchive
from moba.models.problem import Problem
from moba.problems.registry import get_problem
from moba.schemas.experiment import SweepConfig, TableConfig
from moba.schemas.params import BatParams, MobaOptions
from moba.services.benchmark_service import report_failure
from moba.services.export_service import ExportService
from moba.services.metrics_service import MetricsService
from moba.services.moba_service import MobaResult, MobaService

logger = get_logger(__name__)

SWEEP_COLUMNS = [
    "population_size",
    "alpha",
    "gamma",
    "seed",
    "archive_size",
    "infeasible_discards",
    "front_error_raw",
    "front_error_per_point",
]

TABLE_COLUMNS = [
    "problem",
    "iterations",
    "seed",
    "archive_size",
    "front_error_raw",
    "front_error_per_point",
]


def _error_columns(archive: ParetoArchive, problem: Problem) -> Dict[str, float]:
    front = problem.true_front
    raw = None if front is None else MetricsService.front_error(archive, front)
    per_point = None if front is None else MetricsService.front_error_per_point(archive, front)
    return {
        "front_error_raw": np.nan if raw is None else raw,
        "front_error_per_point": np.nan if per_point is None else per_point,
    }


class ExperimentService:
    """Repeats MOBA runs over seeds and parameter settings and tabulates the scores."""

    @staticmethod
    def sweep(cfg: SweepConfig) -> pd.DataFrame:
        """One row per (population size, alpha, gamma, seed), in grid order."""
        problem = get_problem(cfg.problem, cfg.dimension)
        rows: List[Dict[str, Any]] = []
        for params in cfg.grid():
            # only the final front is scored, so one checkpoint per run is enough
            options = cfg.options(trace_every=max(1, params.max_iterations))
            for seed in cfg.seeds:
                result = ExperimentService._run(problem, params, options, cfg.n_points, seed)
                rows.append(
                    {
                        "population_size": params.population_size,
                        "alpha": params.alpha,
                        "gamma": params.gamma,
                        "seed": seed,
                        "archive_size": result.archive.size,
                        "infeasible_discards": result.infeasible_discards,
                        **_error_columns(result.archive, problem),
                    }
                )
                logger.info("Sweep cell finished", **rows[-1])
        return pd.DataFrame(rows, columns=SWEEP_COLUMNS)

    @staticmethod
    def table(cfg: TableConfig) -> pd.DataFrame:
        """
        Front error of each problem at each horizon, one row per (problem, horizon, seed).

        A single run of ``max(horizons)`` iterations per seed serves every horizon:
        checkpoints fall on the greatest common divisor of the horizons.
        """
        horizon = max(cfg.horizons)
        stride = gcd(*cfg.horizons)
        options = cfg.options(trace_every=stride)
        rows: List[Dict[str, Any]] = []
        for name in cfg.problems:
            problem = get_problem(name, cfg.dimension)
            if problem.true_front is None:
                raise ValidationException(
                    f"{name} has no true front to score against", {"problem": name}
                )
            params = cfg.params.model_copy(update={"max_iterations": horizon})
            for seed in cfg.seeds:
                result = ExperimentService._run(problem, params, options, cfg.n_points, seed)
                for t in cfg.horizons:
                    archive = result.checkpoint_archives[t]
                    rows.append(
                        {
                            "problem": name,
                            "iterations": t,
                            "seed": seed,
                            "archive_size": archive.size,
                            **_error_columns(archive, problem),
                        }
                    )
                logger.info("Table runs finished", problem=name, seed=seed, horizon=horizon)
        return pd.DataFrame(rows, columns=TABLE_COLUMNS)

    @staticmethod
    def summarize(frame: pd.DataFrame, by: List[str]) -> pd.DataFrame:
        """Mean and standard deviation of the per-point front error over seeds."""
        grouped = frame.groupby(by, sort=False)["front_error_per_point"]
        summary = grouped.agg(["mean", "std", "size"]).reset_index()
        return summary.rename(
            columns={"mean": "front_error_mean", "std": "front_error_std", "size": "seeds"}
        )

    @staticmethod
    def _run(
        problem: Problem,
        params: BatParams,
        options: MobaOptions,
        n_points: int,
        seed: int,
    ) -> MobaResult:
        params = params.model_copy(update={"seed": seed})
        return MobaService(problem, params, options).run(n_points, RngStream(seed))


def _run_experiment(
    cfg: Union[SweepConfig, TableConfig],
    tabulate: Callable[[], pd.DataFrame],
    by: List[str],
) -> int:
    """Write the per-seed rows to ``cfg.out`` and print the mean over seeds."""
    try:
        ExportService.ensure_writable(cfg.out)
        frame = tabulate()
        ExportService.write_frame(frame, cfg.out)
    except MobaException as exc:
        return report_failure(exc)
    except Exception as exc:
        logger.error("Unhandled experiment error", out=cfg.out, exc_info=True)
        return report_failure(
            BenchmarkException(f"Experiment failed: {exc}", {"type": type(exc).__name__})
        )

    summary = ExperimentService.summarize(frame, by)
    print(summary.to_string(index=False, float_format=ExportService.format_decimal))
    return EXIT_OK


def run_sweep(cfg: SweepConfig) -> int:
    return _run_experiment(
        cfg, lambda: ExperimentService.sweep(cfg), ["population_size", "alpha", "gamma"]
    )


def run_table(cfg: TableConfig) -> int:
    return _run_experiment(cfg, lambda: ExperimentService.table(cfg), ["problem", "iterations"])
