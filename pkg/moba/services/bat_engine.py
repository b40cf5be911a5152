"""
Single-objective bat algorithm.

Equation-level operations broadcast over either one bat or the whole (n, d)
swarm; ``engine_step`` applies them to every bat with one candidate and one
evaluation per bat per iteration.
"""

from typing import Callable, List, NamedTuple, Optional, Tuple

import numpy as np

from moba.core.bounds import BoundsBox, check_dimensions, clamp_to_bounds, uniform_in_box
from moba.core.logging_config import get_logger
from moba.core.random import RngStream
from moba.models.bat import Population, rank_fitness
from moba.models.problem import ScalarObjective
from moba.models.trace import ConvergenceTrace
from moba.schemas.params import BatParams

logger = get_logger(__name__)

# Called with (iteration, best position); returns the front error to record, if any.
CheckpointHook = Callable[[int, np.ndarray], Optional[float]]


class SingleObjectiveResult(NamedTuple):
    best_position: np.ndarray
    best_fitness: float
    trace: ConvergenceTrace


def frequency_from_beta(beta, p: BatParams):
    return p.f_min + (p.f_max - p.f_min) * beta


def sample_frequency(rng: RngStream, p: BatParams, size: Optional[int] = None):
    """f = f_min + (f_max - f_min) beta, beta ~ U[0, 1]."""
    return frequency_from_beta(rng.random(size), p)


def update_velocity(v, x, x_best, f):
    """v + (x - x_best) f, with the (x - x_best) orientation kept as published."""
    v = np.asarray(v, dtype=float)
    x = np.asarray(x, dtype=float)
    x_best = np.asarray(x_best, dtype=float)
    check_dimensions(v, x, "velocity and position")
    check_dimensions(x, x_best, "position and best position")
    f = np.asarray(f, dtype=float)
    if f.ndim == 1 and x.ndim == 2:
        f = f[:, None]
    return v + (x - x_best) * f


def update_position(x, v, b: BoundsBox) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    v = np.asarray(v, dtype=float)
    check_dimensions(x, v, "position and velocity")
    return clamp_to_bounds(x + v, b)


def local_random_walk(x_old, avg_loudness: float, rng: RngStream, b: BoundsBox) -> np.ndarray:
    """x_old + eps * A_mean with eps ~ U[-1, 1]^d, clamped to the box."""
    x_old = np.asarray(x_old, dtype=float)
    eps = rng.symmetric_unit(x_old.shape)
    return clamp_to_bounds(x_old + eps * avg_loudness, b)


def update_loudness_and_rate(A, r0, p: BatParams, t):
    """(alpha A, r0 (1 - exp(-gamma t)))."""
    loudness = p.alpha * np.asarray(A, dtype=float)
    rate = np.asarray(r0, dtype=float) * (1.0 - np.exp(-p.gamma * np.asarray(t, dtype=float)))
    if np.ndim(loudness) == 0 and np.ndim(rate) == 0:
        return float(loudness), float(rate)
    return loudness, rate


def _evaluate(obj: ScalarObjective, X: np.ndarray) -> np.ndarray:
    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        return np.asarray(obj(X), dtype=float).reshape(-1)


def initialize_population(obj: ScalarObjective, p: BatParams, rng: RngStream) -> Population:
    n = p.population_size
    positions = uniform_in_box(obj.bounds, rng, count=n)
    frequencies = sample_frequency(rng, p, n)
    loudness = rng.uniform(*p.loudness_init_range, size=n)
    initial_rates = rng.uniform(*p.rate_init_range, size=n)
    fitness = _evaluate(obj, positions)
    nan_count = int(np.isnan(fitness).sum())
    return Population(
        positions=positions,
        velocities=np.zeros_like(positions),
        frequencies=frequencies,
        loudness=loudness,
        # no improving step yet: r0 (1 - exp(0)) = 0
        pulse_rates=np.zeros(n),
        initial_pulse_rates=initial_rates,
        fitness=rank_fitness(fitness),
        acceptances=np.zeros(n, dtype=int),
        iteration=0,
        nan_evaluations=nan_count,
    )


def engine_step(pop: Population, obj: ScalarObjective, p: BatParams, rng: RngStream) -> Population:
    """One iteration over all bats; every bat sees the best of the previous iteration.

    A bat moves to its candidate when the candidate strictly improves the bat's
    own fitness and either passes the loudness gate (rand < A_i) or strictly
    beats the swarm best held at the start of the step. Loudness and pulse
    rates advance for the whole swarm once per improving step, with t counting
    those steps.
    """
    check_dimensions(pop.positions, obj.bounds.lower, "population and objective")
    n = pop.size
    x_best = pop.best_position
    best_fitness = pop.best_fitness
    mean_loudness = pop.mean_loudness

    frequencies = sample_frequency(rng, p, n)
    velocities = update_velocity(pop.velocities, pop.positions, x_best, frequencies)
    candidates = update_position(pop.positions, velocities, obj.bounds)

    walk = rng.random(n) > pop.pulse_rates
    walked = local_random_walk(
        np.broadcast_to(x_best, candidates.shape), mean_loudness, rng, obj.bounds
    )
    candidates = np.where(walk[:, None], walked, candidates)

    values = _evaluate(obj, candidates)
    nan_mask = np.isnan(values)

    gate = rng.random(n) < pop.loudness
    improves_own = ~nan_mask & (values < pop.fitness)
    improves_best = improves_own & (values < best_fitness)
    accept = improves_own & (gate | improves_best)

    loudness, pulse_rates = pop.loudness, pop.pulse_rates
    improving_steps = pop.improving_steps
    if improves_best.any():
        improving_steps += 1
        loudness, pulse_rates = update_loudness_and_rate(
            pop.loudness, pop.initial_pulse_rates, p, improving_steps
        )

    return pop.evolve(
        positions=np.where(accept[:, None], candidates, pop.positions),
        velocities=np.where(accept[:, None], velocities, pop.velocities),
        frequencies=frequencies,
        loudness=loudness,
        pulse_rates=pulse_rates,
        fitness=np.where(accept, values, pop.fitness),
        acceptances=pop.acceptances + accept,
        iteration=pop.iteration + 1,
        nan_evaluations=pop.nan_evaluations + int(nan_mask.sum()),
        improving_steps=improving_steps,
    )


class SwarmRun(NamedTuple):
    population: Population
    trace: ConvergenceTrace
    improvements: List[Tuple[int, np.ndarray]]


def run_swarm(
    obj: ScalarObjective,
    p: BatParams,
    rng: RngStream,
    on_checkpoint: Optional[CheckpointHook] = None,
    checkpoint_every: int = 1,
    track_improvements: bool = False,
) -> SwarmRun:
    """Initialise a swarm and run ``p.max_iterations`` engine steps.

    The trace has one record per iteration including the initial state.
    ``on_checkpoint`` is called every ``checkpoint_every`` iterations and at the
    last one; its value is stored as the record's front error.
    """
    pop = initialize_population(obj, p, rng)
    trace = ConvergenceTrace()
    improvements: List[Tuple[int, np.ndarray]] = []

    def record(population: Population, previous_best: float) -> None:
        t = population.iteration
        front_error = None
        if on_checkpoint is not None and (t % checkpoint_every == 0 or t == p.max_iterations):
            front_error = on_checkpoint(t, population.best_position)
        trace.append(t, population.best_fitness, front_error)
        if track_improvements and population.best_fitness < previous_best:
            improvements.append((t, population.best_position.copy()))

    record(pop, np.inf)
    for _ in range(p.max_iterations):
        previous_best = pop.best_fitness
        pop = engine_step(pop, obj, p, rng)
        record(pop, previous_best)

    if pop.nan_evaluations:
        logger.warning("NaN objective values rejected", count=pop.nan_evaluations)
    best = pop.bat(pop.best_index)
    logger.debug(
        "Swarm finished",
        iterations=pop.iteration,
        improving_steps=pop.improving_steps,
        best_fitness=best.fitness,
        best_loudness=best.loudness,
        best_pulse_rate=best.pulse_rate,
    )
    return SwarmRun(pop, trace, improvements)


def run_single_objective(
    obj: ScalarObjective, p: BatParams, rng: RngStream
) -> SingleObjectiveResult:
    """Best position, best fitness and the per-iteration best-fitness trace."""
    run = run_swarm(obj, p, rng)
    return SingleObjectiveResult(
        run.population.best_position.copy(), run.population.best_fitness, run.trace
    )
