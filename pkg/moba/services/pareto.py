"""
Pareto dominance, weighted-sum scalarisation and archive maintenance (minimisation).
"""

from typing import Iterable

import numpy as np

from moba.core.bounds import as_real_vector, check_dimensions
from moba.core.exceptions import ContractViolationException
from moba.core.random import RngStream
from moba.models.archive import ParetoArchive, WeightVector


def dominates(u, v) -> bool:
    """u is no worse in every objective and strictly better in one."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    check_dimensions(u, v, "objective vectors")
    return bool(np.all(u <= v) and np.any(u < v))


def weakly_dominates(u, v) -> bool:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    check_dimensions(u, v, "objective vectors")
    return bool(np.all(u <= v))


def sample_weights(k: int, rng: RngStream) -> WeightVector:
    """Normalised independent uniforms on (0, 1)."""
    if k < 1:
        raise ContractViolationException("need at least one objective", {"K": k})
    draws = np.asarray(rng.open_unit(k), dtype=float).reshape(-1)
    weights = draws / draws.sum()
    # absorb rounding so the sum is 1 to within the vector tolerance
    weights[-1] = 1.0 - weights[:-1].sum()
    return WeightVector(np.maximum(weights, 0.0))


def scalarize(f, w: WeightVector):
    """Sum_k w_k f_k for one objective vector or for each row of a batch."""
    f = np.asarray(f, dtype=float)
    check_dimensions(f, w.weights, "objectives and weights")
    return f @ w.weights


def archive_insert(a: ParetoArchive, decision, f) -> ParetoArchive:
    """Insert unless weakly dominated; evict everything the new point dominates."""
    decision = np.asarray(decision, dtype=float).reshape(-1)
    f = as_real_vector(f, "objective vector")
    if a.size == 0:
        return ParetoArchive(decision[None, :], f[None, :])
    check_dimensions(a.objectives, f, "archive objectives and inserted point")

    existing = a.objectives
    if np.any(np.all(existing <= f, axis=1)):
        return a
    dominated = np.all(f <= existing, axis=1) & np.any(f < existing, axis=1)
    keep = ~dominated
    return ParetoArchive(
        np.vstack([a.decisions[keep], decision]),
        np.vstack([existing[keep], f]),
    )


def merge_archives(archives: Iterable[ParetoArchive]) -> ParetoArchive:
    """Non-dominated subset of the union."""
    archives = [a for a in archives if a.size]
    dims = {a.num_objectives for a in archives}
    if len(dims) > 1:
        raise ContractViolationException(
            "archives have mixed objective dimensions", {"dimensions": sorted(dims)}
        )
    merged = ParetoArchive.empty()
    for archive in archives:
        for decision, f in archive.entries():
            merged = archive_insert(merged, decision, f)
    return merged


def pareto_filter(F) -> np.ndarray:
    """Boolean mask of non-dominated rows; among equal rows the first is kept."""
    F = np.atleast_2d(np.asarray(F, dtype=float))
    n = F.shape[0]
    mask = np.zeros(n, dtype=bool)
    if n == 0:
        return mask

    if F.shape[1] == 2:
        # sweep in (f1, f2, index) order keeping strict f2 improvements
        order = np.lexsort((np.arange(n), F[:, 1], F[:, 0]))
        best_f2 = np.inf
        for i in order:
            if F[i, 1] < best_f2:
                mask[i] = True
                best_f2 = F[i, 1]
        return mask

    for i in range(n):
        weak = np.all(F <= F[i], axis=1)
        strict = weak & np.any(F < F[i], axis=1)
        duplicate_before = np.all(F[:i] == F[i], axis=1)
        mask[i] = not strict.any() and not duplicate_before.any()
    return mask
