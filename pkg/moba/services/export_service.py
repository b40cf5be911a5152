"""
Deterministic CSV/JSON writers for fronts, traces and run summaries.
"""

from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np
import pandas as pd

from moba.core.exceptions import OutputException
from moba.models.archive import ParetoArchive
from moba.models.trace import ConvergenceTrace
from moba.schemas.run_config import RunSummary

PathLike = Union[str, Path]

SIGNIFICANT_DIGITS = 12


class ExportService:
    """Writes run results as CSV and JSON files with a fixed number format."""

    @staticmethod
    def format_decimal(value: float) -> str:
        """Positional notation with 12 significant digits."""
        if not np.isfinite(value):
            return str(value)
        return np.format_float_positional(
            value, precision=SIGNIFICANT_DIGITS, unique=False, fractional=False, trim="-"
        )

    @staticmethod
    def ensure_writable(path: PathLike) -> Path:
        path = Path(path)
        parent = path.parent if str(path.parent) else Path(".")
        if not parent.is_dir():
            raise OutputException(
                f"Output directory does not exist: {parent}", {"path": str(path)}
            )
        if path.is_dir():
            raise OutputException(f"Output path is a directory: {path}", {"path": str(path)})
        return path

    @staticmethod
    def write_frame(frame: pd.DataFrame, path: PathLike) -> None:
        path = ExportService.ensure_writable(path)
        try:
            frame.to_csv(
                path,
                index=False,
                float_format=ExportService.format_decimal,
                lineterminator="\n",
                na_rep="",
            )
        except OSError as e:
            raise OutputException(f"Could not write {path}: {e}", {"path": str(path)}) from e

    @staticmethod
    def front_frame(archive: ParetoArchive, dimension: Optional[int] = None) -> pd.DataFrame:
        """
        Rows sorted ascending by f1 (ties by f2): f1, f2, ..., x1, ..., xd.

        ``dimension`` names the decision columns when the archive is empty.
        """
        ordered = archive.sorted_by_first_objective()
        k = ordered.num_objectives or 2
        if ordered.size:
            d = ordered.decisions.shape[1]
        else:
            d = dimension or 0
        columns = [f"f{i + 1}" for i in range(k)] + [f"x{i + 1}" for i in range(d)]
        if not ordered.size:
            return pd.DataFrame(columns=columns)
        data = np.hstack([ordered.objectives, ordered.decisions])
        return pd.DataFrame(data, columns=columns)

    @staticmethod
    def write_front_csv(
        archive: ParetoArchive, path: PathLike, dimension: Optional[int] = None
    ) -> None:
        ExportService.write_frame(ExportService.front_frame(archive, dimension), path)

    @staticmethod
    def trace_frame(traces: List[ConvergenceTrace], every: int = 10) -> pd.DataFrame:
        """Every ``every``-th record of each run plus its last record."""
        rows = []
        for run, trace in enumerate(traces):
            last = trace.last
            for record in trace:
                if record.iteration % every == 0 or record is last:
                    rows.append(
                        (
                            run,
                            record.iteration,
                            record.best_scalar,
                            np.nan if record.front_error is None else record.front_error,
                        )
                    )
        return pd.DataFrame(
            rows, columns=["run", "iteration", "best_scalar", "front_error"]
        ).astype({"run": int, "iteration": int, "best_scalar": float, "front_error": float})

    @staticmethod
    def write_trace_csv(traces: List[ConvergenceTrace], path: PathLike, every: int = 10) -> None:
        ExportService.write_frame(ExportService.trace_frame(traces, every), path)

    @staticmethod
    def front_trace_frame(
        front_trace: ConvergenceTrace, checkpoint_archives: Dict[int, ParetoArchive]
    ) -> pd.DataFrame:
        rows = []
        for record in front_trace:
            archive = checkpoint_archives[record.iteration]
            per_point = None
            if record.front_error is not None:
                per_point = record.front_error / archive.size
            rows.append(
                (
                    record.iteration,
                    archive.size,
                    np.nan if record.front_error is None else record.front_error,
                    np.nan if per_point is None else per_point,
                )
            )
        return pd.DataFrame(
            rows,
            columns=["iteration", "archive_size", "front_error_raw", "front_error_per_point"],
        ).astype({"iteration": int, "archive_size": int})

    @staticmethod
    def write_front_trace_csv(
        front_trace: ConvergenceTrace,
        checkpoint_archives: Dict[int, ParetoArchive],
        path: PathLike,
    ) -> None:
        ExportService.write_frame(
            ExportService.front_trace_frame(front_trace, checkpoint_archives), path
        )

    @staticmethod
    def write_summary_json(summary: RunSummary, path: PathLike) -> None:
        path = ExportService.ensure_writable(path)
        try:
            path.write_text(
                summary.model_dump_json(indent=2) + "\n", encoding="utf-8", newline="\n"
            )
        except OSError as e:
            raise OutputException(f"Could not write {path}: {e}", {"path": str(path)}) from e

    @staticmethod
    def summary_line(summary: RunSummary, total_points: int, wall_seconds: float) -> str:
        error = "n/a" if summary.front_error_raw is None else f"{summary.front_error_raw:.6g}"
        return (
            f"problem={summary.problem} points={total_points} "
            f"archive={summary.archive_size} E_f={error} wall={wall_seconds:.2f}s"
        )
