"""
Pydantic schemas for benchmark runs and their summary document.
"""

from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from moba.core.config import settings
from moba.schemas.params import BatParams, MobaOptions


class OutputPaths(BaseModel):
    front: str = Field(default=settings.out_front, description="Front CSV path")
    trace: str = Field(default=settings.out_trace, description="Trace CSV path")
    summary: str = Field(default=settings.out_summary, description="Summary JSON path")
    front_trace: Optional[str] = Field(
        default=None, description="Optional CSV of front error per checkpoint"
    )


class RunConfig(BaseModel):
    """Full description of a benchmark run."""

    model_config = ConfigDict(frozen=True)

    problem: str = Field(..., description="Registered problem name")
    dimension: Optional[int] = Field(default=None, ge=1, description="Dimension override")
    params: BatParams = Field(default_factory=BatParams)
    n_points: int = Field(default=settings.n_points, ge=1, description="Weight runs per restart")
    restarts: int = Field(default=settings.restarts, ge=1, description="Independent restarts")
    penalty: float = Field(default=settings.penalty, ge=0.0)
    constraint_tolerance: float = Field(default=settings.constraint_tolerance, ge=0.0)
    trace_every: int = Field(default=settings.trace_every, ge=1)
    archive_improvements: bool = False
    workers: int = Field(default=settings.workers, ge=1)
    record_wall_time: bool = Field(
        default=False, description="Store wall time in the summary file"
    )
    outputs: OutputPaths = Field(default_factory=OutputPaths)
    log_level: str = Field(default=settings.log_level, description="Logging level")

    @field_validator("problem")
    @classmethod
    def validate_problem(cls, v: str) -> str:
        from moba.problems.registry import available_problems

        if v not in available_problems():
            raise ValueError(
                f"unknown problem '{v}', expected one of {available_problems()}"
            )
        return v

    @property
    def total_points(self) -> int:
        return self.n_points * self.restarts

    def options(self) -> MobaOptions:
        return MobaOptions(
            penalty=self.penalty,
            constraint_tolerance=self.constraint_tolerance,
            trace_every=self.trace_every,
            archive_improvements=self.archive_improvements,
            workers=self.workers,
        )

    def reproducible_dump(self) -> Dict[str, Any]:
        """Configuration fields that determine the output files."""
        return self.model_dump(mode="json", exclude={"workers", "record_wall_time", "log_level"})


class RunSummary(BaseModel):
    problem: str
    config: Dict[str, Any]
    archive_size: int
    front_error_raw: Optional[float] = None
    front_error_per_point: Optional[float] = None
    wall_seconds: Optional[float] = None
    infeasible_discards: int = 0
    nan_evaluations: int = 0
