"""
Application configuration management using Pydantic Settings.
"""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Built-in defaults with environment variable support."""

    # Application
    app_name: str = Field(default="Multiobjective Bat Algorithm", alias="MOBA_APP_NAME")
    version: str = Field(default="0.1.0", alias="MOBA_VERSION")

    # Bat algorithm
    population_size: int = Field(default=50, alias="MOBA_POPULATION_SIZE")
    alpha: float = Field(default=0.9, alias="MOBA_ALPHA")
    gamma: float = Field(default=0.9, alias="MOBA_GAMMA")
    f_min: float = Field(default=0.0, alias="MOBA_F_MIN")
    f_max: float = Field(default=1.0, alias="MOBA_F_MAX")
    max_iterations: int = Field(default=5000, alias="MOBA_MAX_ITERATIONS")
    seed: int = Field(default=0, alias="MOBA_SEED")

    # Multiobjective runs
    n_points: int = Field(default=50, alias="MOBA_POINTS")
    restarts: int = Field(default=1, alias="MOBA_RESTARTS")
    penalty: float = Field(default=1e6, alias="MOBA_PENALTY")
    constraint_tolerance: float = Field(default=1e-6, alias="MOBA_CONSTRAINT_TOLERANCE")
    zdt3_front_samples: int = Field(default=10_000, alias="MOBA_ZDT3_FRONT_SAMPLES")
    workers: int = Field(default=1, alias="MOBA_WORKERS")

    # Output
    trace_every: int = Field(default=10, alias="MOBA_TRACE_EVERY")
    out_front: str = Field(default="front.csv", alias="MOBA_OUT_FRONT")
    out_trace: str = Field(default="trace.csv", alias="MOBA_OUT_TRACE")
    out_summary: str = Field(default="summary.json", alias="MOBA_OUT_SUMMARY")

    # Monitoring
    log_level: str = Field(default="WARNING", alias="MOBA_LOG_LEVEL")
    log_file: Optional[str] = Field(default=None, alias="MOBA_LOG_FILE")

    model_config = {"env_file": ".env", "case_sensitive": False, "extra": "ignore"}


# Global settings instance
settings = Settings()
