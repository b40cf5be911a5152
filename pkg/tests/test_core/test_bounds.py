import numpy as np
import pytest

from moba.core.bounds import BoundsBox, as_real_vector, clamp_to_bounds, uniform_in_box
from moba.core.exceptions import ContractViolationException
from moba.core.random import RngStream


class TestBoundsBox:
    def test_dimension(self):
        box = BoundsBox([0, -1], [1, 1])
        assert box.dimension == 2

    def test_lower_must_be_below_upper(self):
        with pytest.raises(ContractViolationException):
            BoundsBox([0.0, 1.0], [1.0, 1.0])

    def test_dimension_mismatch(self):
        with pytest.raises(ContractViolationException):
            BoundsBox([0.0], [1.0, 1.0])

    def test_non_finite_bound(self):
        with pytest.raises(ContractViolationException):
            BoundsBox([0.0], [np.inf])

    def test_bounds_are_read_only(self):
        box = BoundsBox.uniform(0.0, 1.0, 3)
        with pytest.raises(ValueError):
            box.lower[0] = 5.0


def test_as_real_vector_rejects_nan():
    with pytest.raises(ContractViolationException):
        as_real_vector([1.0, np.nan])


def test_as_real_vector_rejects_empty():
    with pytest.raises(ContractViolationException):
        as_real_vector([])


@pytest.mark.parametrize(
    "x, expected",
    [
        ([0.5], [0.5]),
        ([1.2], [1.0]),
    ],
)
def test_clamp_one_dimension(x, expected, unit_box):
    assert clamp_to_bounds(np.array(x), unit_box).tolist() == expected


def test_clamp_lower_face():
    box = BoundsBox.uniform(0.0, 1.0, 2)
    assert clamp_to_bounds(np.array([-3.0, 0.5]), box).tolist() == [0.0, 0.5]


def test_clamp_dimension_mismatch(unit_box):
    with pytest.raises(ContractViolationException):
        clamp_to_bounds(np.array([0.1, 0.2]), unit_box)


def test_clamp_is_idempotent_and_inside(np_rng):
    box = BoundsBox([-1.0, 0.0, 2.0], [1.0, 5.0, 3.0])
    X = np_rng.normal(scale=4.0, size=(200, 3))
    once = clamp_to_bounds(X, box)
    assert np.array_equal(clamp_to_bounds(once, box), once)
    assert all(box.contains(row) for row in once)


def test_uniform_in_box_is_deterministic():
    box = BoundsBox.uniform(0.0, 1.0, 30)
    a = uniform_in_box(box, RngStream(99))
    b = uniform_in_box(box, RngStream(99))
    assert np.array_equal(a, b)


def test_uniform_in_box_membership_and_mean():
    box = BoundsBox.uniform(0.0, 1.0, 2)
    X = uniform_in_box(box, RngStream(5), count=100_000)
    assert X.shape == (100_000, 2)
    assert np.all((X >= 0.0) & (X <= 1.0))
    assert np.all(np.abs(X.mean(axis=0) - 0.5) < 0.01)


def test_uniform_in_narrow_box():
    box = BoundsBox([2.0], [2.0 + 1e-12])
    x = uniform_in_box(box, RngStream(3))
    assert x[0] == pytest.approx(2.0, abs=1e-11)
