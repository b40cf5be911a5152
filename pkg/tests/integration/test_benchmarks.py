"""
Long-running benchmark checks. Deselected by default; run with ``pytest -m integration``.
"""

import statistics
from itertools import pairwise

import numpy as np
import pytest

from moba.core.random import RngStream
from moba.problems.lz import lz4, pareto_set_point
from moba.problems.registry import get_problem
from moba.problems.sphere import sphere
from moba.schemas.params import BatParams, MobaOptions
from moba.services.bat_engine import run_single_objective
from moba.services.metrics_service import MetricsService
from moba.services.moba_service import MobaService
from moba.services.pareto import dominates

pytestmark = pytest.mark.integration

SEEDS = [1, 2, 3, 4, 5]
WORKERS = 4


def merged_run(problem, params, n_points, restarts=1, **options):
    opts = MobaOptions(workers=WORKERS, **options)
    rng = RngStream(params.seed)
    service = MobaService(problem, params, opts)
    return MobaService.merge([service.run(n_points, rng, restart) for restart in range(restarts)])


def assert_mutually_non_dominated(objectives):
    for i, u in enumerate(objectives):
        for v in objectives[i + 1 :]:
            assert not dominates(u, v) and not dominates(v, u)


def test_zdt1_two_hundred_points():
    problem = get_problem("zdt1")
    raw, per_point = [], []
    for seed in SEEDS:
        params = BatParams(max_iterations=2000, seed=seed)
        result = merged_run(problem, params, 50, restarts=4)
        F = result.archive.objectives
        assert np.all((F[:, 0] >= 0.0) & (F[:, 0] <= 1.0))
        assert np.all(F[:, 1] >= 1.0 - np.sqrt(F[:, 0]) - 0.05)
        raw.append(MetricsService.front_error(result.archive, problem.true_front))
        per_point.append(MetricsService.front_error_per_point(result.archive, problem.true_front))

    assert statistics.median(raw) <= 1e-2
    assert statistics.median(per_point) <= 1e-4


def test_zdt1_front_error_decreases_across_checkpoints():
    problem = get_problem("zdt1")
    decreasing = []
    for seed in SEEDS:
        params = BatParams(max_iterations=2000, seed=seed)
        result = merged_run(problem, params, 50, trace_every=500)
        trace = MetricsService.front_error_trace(result.checkpoint_archives, problem.true_front)
        errors = [trace.at(t).front_error for t in (500, 1000, 2000)]
        # a front already on the true front stays at zero error
        decreasing.append(all(a > b or b == 0.0 for a, b in pairwise(errors)))

        for run_trace in result.traces:
            values = run_trace.best_values()
            assert all(b <= a for a, b in zip(values, values[1:]))

    assert sum(decreasing) >= 3


def test_zdt1_longer_runs_do_not_lose_accuracy():
    problem = get_problem("zdt1")
    params = BatParams(max_iterations=5000, seed=1)
    result = merged_run(problem, params, 50, trace_every=1000)
    trace = MetricsService.front_error_trace(result.checkpoint_archives, problem.true_front)
    assert trace.at(5000).front_error <= trace.at(2000).front_error


def test_zdt3_front_structure():
    problem = get_problem("zdt3")
    params = BatParams(max_iterations=2000, seed=1)
    result = merged_run(problem, params, 50)

    assert result.archive.objectives[:, 0].max() <= 0.86
    assert MetricsService.front_error_per_point(result.archive, problem.true_front) <= 1e-3


def test_lz4_front():
    for x1 in np.linspace(0.0, 1.0, 100):
        np.testing.assert_allclose(
            lz4(pareto_set_point(x1)), [x1, 1.0 - x1**2], atol=1e-12
        )

    problem = get_problem("lz4")
    params = BatParams(max_iterations=2000, seed=1)
    result = merged_run(problem, params, 50)
    assert MetricsService.front_error_per_point(result.archive, problem.true_front) <= 1e-2


def test_welded_beam_tradeoff_curve():
    problem = get_problem("welded-beam")
    params = BatParams(max_iterations=1000, seed=1)
    result = merged_run(problem, params, 50)
    archive = result.archive.sorted_by_first_objective()

    assert archive.size >= 30
    assert np.all(problem.constraint_values(archive.decisions) <= 1e-6)
    assert np.all(np.diff(archive.objectives[:, 1]) <= 0.0)
    assert_mutually_non_dominated(archive.objectives)
    assert result.infeasible_discards <= 50 - archive.size


@pytest.mark.parametrize("seed", SEEDS)
def test_sphere_smoke(seed):
    params = BatParams(population_size=50, max_iterations=2000, seed=seed)
    result = run_single_objective(sphere(10), params, RngStream(seed))

    values = result.trace.best_values()
    assert all(b <= a for a, b in zip(values, values[1:]))
    assert result.best_fitness <= 1e-6


def test_restarts_reproducible():
    problem = get_problem("zdt1", 10)
    params = BatParams(max_iterations=300, seed=42)
    first = merged_run(problem, params, 20, restarts=2)
    second = merged_run(problem, params, 20, restarts=2)

    np.testing.assert_array_equal(first.archive.objectives, second.archive.objectives)
    np.testing.assert_array_equal(first.archive.decisions, second.archive.decisions)
