"""
Bat agents and the population they form.

The population stores one row per bat so an engine step can be evaluated on
the whole swarm at once; ``Population.bat(i)`` gives the per-agent view.
"""

from dataclasses import dataclass, field, replace

import numpy as np


@dataclass(frozen=True)
class Bat:
    position: np.ndarray
    velocity: np.ndarray
    frequency: float
    loudness: float
    pulse_rate: float
    initial_pulse_rate: float
    fitness: float


def rank_fitness(fitness: np.ndarray) -> np.ndarray:
    """NaN ranks as +inf."""
    return np.where(np.isnan(fitness), np.inf, fitness)


@dataclass(frozen=True, eq=False)
class Population:
    """Swarm state at iteration ``iteration``."""

    positions: np.ndarray
    velocities: np.ndarray
    frequencies: np.ndarray
    loudness: np.ndarray
    pulse_rates: np.ndarray
    initial_pulse_rates: np.ndarray
    fitness: np.ndarray
    acceptances: np.ndarray
    iteration: int = 0
    nan_evaluations: int = 0
    # iterations in which the swarm best strictly improved
    improving_steps: int = 0
    best_index: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "best_index", int(np.argmin(rank_fitness(self.fitness))))

    @property
    def size(self) -> int:
        return int(self.positions.shape[0])

    @property
    def dimension(self) -> int:
        return int(self.positions.shape[1])

    @property
    def best_position(self) -> np.ndarray:
        return self.positions[self.best_index]

    @property
    def best_fitness(self) -> float:
        return float(rank_fitness(self.fitness)[self.best_index])

    @property
    def mean_loudness(self) -> float:
        return float(np.mean(self.loudness))

    def bat(self, i: int) -> Bat:
        return Bat(
            position=self.positions[i].copy(),
            velocity=self.velocities[i].copy(),
            frequency=float(self.frequencies[i]),
            loudness=float(self.loudness[i]),
            pulse_rate=float(self.pulse_rates[i]),
            initial_pulse_rate=float(self.initial_pulse_rates[i]),
            fitness=float(self.fitness[i]),
        )

    def evolve(self, **changes) -> "Population":
        """Copy with some arrays replaced; best_index is recomputed."""
        return replace(self, **changes)
