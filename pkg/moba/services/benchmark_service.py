"""
Benchmark orchestration: restarts, merging, metrics and output files.
"""

import sys
import time
from dataclasses import dataclass
from typing import Optional

from moba.core.exceptions import EXIT_OK, BenchmarkException, MobaException, exit_code_for
from moba.core.logging_config import get_logger
from moba.core.random import RngStream
from moba.models.problem import Problem
from moba.models.trace import ConvergenceTrace
from moba.problems.registry import get_problem
from moba.schemas.run_config import RunConfig, RunSummary
from moba.services.export_service import ExportService
from moba.services.metrics_service import MetricsService
from moba.services.moba_service import MobaResult, MobaService

logger = get_logger(__name__)


@dataclass
class BenchmarkOutcome:
    result: MobaResult
    summary: RunSummary
    front_trace: Optional[ConvergenceTrace]
    wall_seconds: float


class BenchmarkService:
    """Runs one configured experiment and writes its files."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.problem: Problem = get_problem(cfg.problem, cfg.dimension)

    def check_outputs(self) -> None:
        outputs = self.cfg.outputs
        for path in (outputs.front, outputs.trace, outputs.summary, outputs.front_trace):
            if path:
                ExportService.ensure_writable(path)

    def execute(self) -> BenchmarkOutcome:
        started = time.perf_counter()
        rng = RngStream(self.cfg.params.seed)
        service = MobaService(self.problem, self.cfg.params, self.cfg.options())

        merged = MobaService.merge(
            [service.run(self.cfg.n_points, rng, restart) for restart in range(self.cfg.restarts)]
        )

        front = self.problem.true_front
        front_trace = None
        if front is not None and merged.checkpoint_archives:
            front_trace = MetricsService.front_error_trace(
                merged.checkpoint_archives, front, merged.checkpoint_best
            )

        wall_seconds = time.perf_counter() - started
        summary = RunSummary(
            problem=self.problem.name,
            config=self.cfg.reproducible_dump(),
            archive_size=merged.archive.size,
            front_error_raw=(
                None if front is None else MetricsService.front_error(merged.archive, front)
            ),
            front_error_per_point=(
                None
                if front is None
                else MetricsService.front_error_per_point(merged.archive, front)
            ),
            wall_seconds=round(wall_seconds, 3) if self.cfg.record_wall_time else None,
            infeasible_discards=merged.infeasible_discards,
            nan_evaluations=merged.nan_evaluations,
        )
        logger.info(
            "Benchmark finished",
            problem=self.problem.name,
            archive_size=summary.archive_size,
            front_error=summary.front_error_raw,
            wall_seconds=round(wall_seconds, 3),
        )
        return BenchmarkOutcome(merged, summary, front_trace, wall_seconds)

    def write(self, outcome: BenchmarkOutcome) -> None:
        outputs = self.cfg.outputs
        ExportService.write_front_csv(
            outcome.result.archive, outputs.front, self.problem.dimension
        )
        ExportService.write_trace_csv(outcome.result.traces, outputs.trace, self.cfg.trace_every)
        ExportService.write_summary_json(outcome.summary, outputs.summary)
        if outputs.front_trace and outcome.front_trace is not None:
            ExportService.write_front_trace_csv(
                outcome.front_trace, outcome.result.checkpoint_archives, outputs.front_trace
            )
        elif outputs.front_trace:
            logger.warning("No true front, front trace not written", problem=self.problem.name)


def report_failure(exc: MobaException) -> int:
    logger.error("Benchmark failed", error=exc.message, details=exc.details)
    print(f"error: {exc.message}", file=sys.stderr)
    return exit_code_for(exc)


def run_benchmark(cfg: RunConfig) -> int:
    """Run, write the three output files, print the summary line; return the exit status."""
    try:
        service = BenchmarkService(cfg)
        service.check_outputs()
        outcome = service.execute()
        service.write(outcome)
    except MobaException as exc:
        return report_failure(exc)
    except Exception as exc:
        # unexpected errors still end in a one-line report and exit code 1
        logger.error("Unhandled benchmark error", problem=cfg.problem, exc_info=True)
        return report_failure(
            BenchmarkException(f"Benchmark failed: {exc}", {"type": type(exc).__name__})
        )

    print(ExportService.summary_line(outcome.summary, cfg.total_points, outcome.wall_seconds))
    return EXIT_OK
