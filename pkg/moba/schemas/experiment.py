"""
Pydantic schemas for parameter sweeps and the convergence table.
"""

from typing import Annotated, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from moba.core.config import settings
from moba.schemas.params import BatParams, MobaOptions

TABLE_PROBLEMS = ["zdt1", "zdt2", "zdt3", "lz4"]
TABLE_HORIZONS = [2000, 5000]


def _known_problem(name: str) -> str:
    from moba.problems.registry import available_problems

    if name not in available_problems():
        raise ValueError(f"unknown problem '{name}', expected one of {available_problems()}")
    return name


class ExperimentBase(BaseModel):
    """Fields shared by every multi-run experiment."""

    model_config = ConfigDict(frozen=True)

    dimension: Optional[int] = Field(default=None, ge=1, description="Dimension override")
    params: BatParams = Field(default_factory=BatParams, description="Base bat parameters")
    n_points: int = Field(default=settings.n_points, ge=1, description="Weight runs per seed")
    seeds: List[Annotated[int, Field(ge=0)]] = Field(
        default_factory=lambda: [settings.seed], min_length=1
    )
    penalty: float = Field(default=settings.penalty, ge=0.0)
    workers: int = Field(default=settings.workers, ge=1)
    out: str = Field(..., description="Result CSV path")
    log_level: str = Field(default=settings.log_level, description="Logging level")

    def options(self, trace_every: int = settings.trace_every) -> MobaOptions:
        return MobaOptions(penalty=self.penalty, trace_every=trace_every, workers=self.workers)


class SweepConfig(ExperimentBase):
    """Grid over population size, loudness cooling and pulse rate growth."""

    problem: str = Field(..., description="Registered problem name")
    population_sizes: List[Annotated[int, Field(ge=1)]] = Field(
        default_factory=lambda: [settings.population_size], min_length=1
    )
    alphas: List[Annotated[float, Field(gt=0.0, le=1.0)]] = Field(
        default_factory=lambda: [settings.alpha], min_length=1
    )
    gammas: List[Annotated[float, Field(gt=0.0)]] = Field(
        default_factory=lambda: [settings.gamma], min_length=1
    )
    out: str = Field(default="sweep.csv", description="Result CSV path")

    @field_validator("problem")
    @classmethod
    def validate_problem(cls, v: str) -> str:
        return _known_problem(v)

    def grid(self) -> List[BatParams]:
        """Every (n, alpha, gamma) combination, with n outermost and gamma innermost."""
        return [
            self.params.model_copy(update={"population_size": n, "alpha": a, "gamma": g})
            for n in self.population_sizes
            for a in self.alphas
            for g in self.gammas
        ]


class TableConfig(ExperimentBase):
    """Front error of several problems at fixed iteration horizons."""

    problems: List[str] = Field(default_factory=lambda: list(TABLE_PROBLEMS), min_length=1)
    horizons: List[Annotated[int, Field(ge=1)]] = Field(
        default_factory=lambda: list(TABLE_HORIZONS), min_length=1
    )
    out: str = Field(default="table.csv", description="Result CSV path")

    @field_validator("problems")
    @classmethod
    def validate_problems(cls, v: List[str]) -> List[str]:
        return [_known_problem(name) for name in v]

    @field_validator("horizons")
    @classmethod
    def validate_horizons(cls, v: List[int]) -> List[int]:
        return sorted(set(v))
