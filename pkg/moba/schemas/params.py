"""
Pydantic schema for bat algorithm parameters.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from moba.core.config import settings


class BatParams(BaseModel):
    """Parameters of one bat algorithm run."""

    model_config = ConfigDict(frozen=True)

    population_size: int = Field(
        default=settings.population_size, ge=1, description="Number of bats n"
    )
    f_min: float = Field(default=settings.f_min, description="Lowest pulse frequency")
    f_max: float = Field(default=settings.f_max, description="Highest pulse frequency")
    alpha: float = Field(
        default=settings.alpha, gt=0.0, le=1.0, description="Loudness cooling factor"
    )
    gamma: float = Field(default=settings.gamma, gt=0.0, description="Pulse rate growth")
    loudness_init_range: Tuple[float, float] = Field(
        default=(1.0, 2.0), description="Initial loudness interval"
    )
    rate_init_range: Tuple[float, float] = Field(
        default=(0.0, 1.0), description="Initial pulse rate interval"
    )
    max_iterations: int = Field(
        default=settings.max_iterations, ge=0, description="Iterations per run"
    )
    seed: int = Field(default=settings.seed, ge=0, description="Random seed")

    @field_validator("f_max")
    @classmethod
    def validate_frequency_range(cls, v: float, info: ValidationInfo) -> float:
        f_min = info.data.get("f_min")
        if f_min is not None and v < f_min:
            raise ValueError("f_max must be greater than or equal to f_min")
        return v

    @field_validator("loudness_init_range")
    @classmethod
    def validate_loudness_range(cls, v: Tuple[float, float]) -> Tuple[float, float]:
        low, high = v
        if low <= 0 or high < low:
            raise ValueError("loudness range must satisfy 0 < low <= high")
        return v

    @field_validator("rate_init_range")
    @classmethod
    def validate_rate_range(cls, v: Tuple[float, float]) -> Tuple[float, float]:
        low, high = v
        if not 0.0 <= low <= high <= 1.0:
            raise ValueError("pulse rate range must lie inside [0, 1]")
        return v


class MobaOptions(BaseModel):
    """Options of a multiobjective run beyond the bat parameters."""

    model_config = ConfigDict(frozen=True)

    penalty: float = Field(default=settings.penalty, ge=0.0)
    constraint_tolerance: float = Field(default=settings.constraint_tolerance, ge=0.0)
    trace_every: int = Field(default=settings.trace_every, ge=1)
    archive_improvements: bool = Field(
        default=False, description="Archive every improving best, not only the final one"
    )
    workers: int = Field(default=settings.workers, ge=1)
