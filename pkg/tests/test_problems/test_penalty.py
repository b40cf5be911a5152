import numpy as np
import pytest

from moba.models.archive import WeightVector
from moba.problems.penalty import penalized_objective, penalized_scalar, penalty_term
from moba.problems.welded_beam import OBJECTIVE_SCALE, UPPER, beam_constraints, make_welded_beam
from moba.problems.zdt import make_zdt1
from moba.services.pareto import scalarize

EVEN = WeightVector(np.array([0.5, 0.5]))


class TestPenalty:
    def test_unconstrained_is_weighted_sum(self):
        problem = make_zdt1(3)
        x = np.array([0.25, 0.0, 0.0])
        assert penalized_scalar(problem, x, EVEN) == pytest.approx(
            scalarize(problem.evaluate(x), EVEN)
        )

    def test_feasible_point_not_penalised(self):
        problem = make_welded_beam()
        x = np.array([0.5, 2.0, 8.0, 0.5])
        assert penalty_term(problem, x, 1e6)[0] == 0.0

    def test_quadratic_exterior_penalty(self):
        problem = make_welded_beam()
        g = beam_constraints(UPPER)[0]
        expected = scalarize(problem.evaluate(UPPER) / OBJECTIVE_SCALE, EVEN) + 1e6 * np.sum(
            np.maximum(0.0, g) ** 2
        )
        assert penalized_scalar(problem, UPPER, EVEN, 1e6) == pytest.approx(expected)

    def test_zero_penalty(self):
        problem = make_welded_beam()
        assert penalized_scalar(problem, UPPER, EVEN, 0.0) == pytest.approx(
            scalarize(problem.scale_objectives(problem.evaluate(UPPER)), EVEN)
        )

    def test_beam_objectives_weighted_after_scaling(self):
        problem = make_welded_beam()
        x = np.array([0.5, 2.0, 8.0, 0.5])
        cost, deflection = problem.evaluate(x)
        expected = 0.5 * cost / 5.0 + 0.5 * deflection / 0.015
        assert penalized_scalar(problem, x, EVEN) == pytest.approx(expected)

    def test_negative_penalty_rejected(self):
        with pytest.raises(ValueError):
            penalized_scalar(make_zdt1(3), np.zeros(3), EVEN, -1.0)

    def test_returns_float_for_vector(self):
        assert isinstance(penalized_scalar(make_zdt1(3), np.zeros(3), EVEN), float)


class TestPenalizedObjective:
    def test_batch_matches_single(self, np_rng):
        problem = make_welded_beam()
        objective = penalized_objective(problem, EVEN)
        X = problem.bounds.lower + np_rng.random((5, 4)) * (
            problem.bounds.upper - problem.bounds.lower
        )

        values = objective(X)
        assert values.shape == (5,)
        for x, value in zip(X, values):
            assert objective(x) == pytest.approx(value)

    def test_shares_problem_bounds(self):
        problem = make_zdt1(3)
        assert penalized_objective(problem, EVEN).bounds is problem.bounds


def test_penalised_never_below_weighted_sum(np_rng):
    problem = make_welded_beam()
    X = problem.bounds.lower + np_rng.random((50, 4)) * (
        problem.bounds.upper - problem.bounds.lower
    )
    plain = scalarize(problem.scale_objectives(problem.evaluate(X)), EVEN)
    penalised = penalized_scalar(problem, X, EVEN)
    assert np.all(penalised >= plain)
    feasible = problem.is_feasible(X)
    np.testing.assert_allclose(penalised[feasible], plain[feasible])
