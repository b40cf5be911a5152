"""
Bi-objective welded beam design: fabrication cost and end deflection.

Decision vector ordering is (w, L, d, h): weld width, weld length, beam depth,
beam thickness. Formulas follow the printed model, including the
tau = sqrt(alpha^2 + alpha*beta*L/D + beta^2) shear combination.
"""

from typing import Dict

import numpy as np

from moba.core.bounds import BoundsBox
from moba.models.problem import Problem

LOAD = 6000.0
SHEAR_LIMIT = 13600.0
STRESS_LIMIT = 30000.0
DEFLECTION_LIMIT = 0.25

LOWER = np.array([0.125, 0.1, 0.1, 0.125])
UPPER = np.array([2.0, 10.0, 10.0, 2.0])

# cost is capped near 5 by g5; deflection on the front stays below about 0.015
OBJECTIVE_SCALE = (5.0, 0.015)


def _unpack(x):
    X = np.atleast_2d(np.asarray(x, dtype=float))
    return X[:, 0], X[:, 1], X[:, 2], X[:, 3]


def auxiliary_quantities(x) -> Dict[str, np.ndarray]:
    """sigma, Q, D, J, delta, beta, alpha, tau and P for each row."""
    w, L, d, h = _unpack(x)
    sigma = 504000.0 / (h * d**2)
    Q = LOAD * (14.0 + L / 2.0)
    D = 0.5 * np.sqrt(L**2 + (w + d) ** 2)
    J = np.sqrt(2.0) * w * L * (L**2 / 6.0 + (w + d) ** 2 / 2.0)
    delta = 65856.0 / (30000.0 * h * d**3)
    beta = Q * D / J
    alpha = LOAD / (np.sqrt(2.0) * w * L)
    tau = np.sqrt(alpha**2 + alpha * beta * L / D + beta**2)
    P = 0.61423e6 * (d * h**3 / 6.0) * (1.0 - d * np.sqrt(30.0 / 48.0) / 28.0)
    return {
        "sigma": sigma,
        "Q": Q,
        "D": D,
        "J": J,
        "delta": delta,
        "beta": beta,
        "alpha": alpha,
        "tau": tau,
        "P": P,
    }


def beam_objectives(x) -> np.ndarray:
    w, L, d, h = _unpack(x)
    cost = 1.10471 * w**2 * L + 0.04811 * d * h * (14.0 + L)
    deflection = 65856.0 / (30000.0 * h * d**3)
    return np.column_stack([cost, deflection])


def beam_constraints(x) -> np.ndarray:
    """g1..g7, each <= 0 when feasible."""
    w, L, d, h = _unpack(x)
    aux = auxiliary_quantities(x)
    return np.column_stack(
        [
            w - h,
            aux["delta"] - DEFLECTION_LIMIT,
            aux["tau"] - SHEAR_LIMIT,
            aux["sigma"] - STRESS_LIMIT,
            0.10471 * w**2 + 0.04811 * h * d * (14.0 + L) - 5.0,
            0.125 - w,
            LOAD - aux["P"],
        ]
    )


def welded_beam(x):
    """(objectives, constraint values) for one design or a batch."""
    f, g = beam_objectives(x), beam_constraints(x)
    if np.ndim(x) == 1:
        return f[0], g[0]
    return f, g


def make_welded_beam() -> Problem:
    return Problem(
        name="welded-beam",
        dimension=4,
        num_objectives=2,
        bounds=BoundsBox(LOWER, UPPER),
        objectives=beam_objectives,
        constraints=beam_constraints,
        num_constraints=7,
        objective_scale=OBJECTIVE_SCALE,
    )
