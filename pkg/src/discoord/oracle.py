"""Dense reference implementations for cross-checking the iterative solvers.

Nothing here is on the production path. Everything is O(n^3) and written
straight from the matrix form of the recurrences, independently of the
sparse per-edge updates in :mod:`discoord.generation` and
:mod:`discoord.distribution`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularSystem
from .graph import Graph
from .scenario import Scenario


def generation_matrix(g: Graph) -> np.ndarray:
    """``P[i, j] = 1/(1+|N_j|)`` for ``j in N_i or j == i``; columns sum to 1."""
    n = g.node_count
    P = np.zeros((n, n))
    for j in range(1, n + 1):
        wt = 1.0 / (1 + len(g.neighbors(j)))
        P[j - 1, j - 1] = wt
        for i in g.neighbors(j):
            P[i - 1, j - 1] = wt
    return P


def metropolis_matrix(g: Graph) -> np.ndarray:
    """Symmetric doubly-stochastic averaging matrix with Metropolis weights."""
    n = g.node_count
    W = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in g.neighbors(i):
            W[i - 1, j - 1] = 1.0 / (1 + max(len(g.neighbors(i)), len(g.neighbors(j))))
    W[np.diag_indices(n)] = 1.0 - W.sum(axis=1)
    return W


def _initial_vectors(s: Scenario):
    e0 = np.array(s.initial)
    ed = np.array(s.desired)
    lo = np.array(s.lower)
    up = np.array(s.upper)
    return e0, ed, lo, up


def generation_fixed_point(s: Scenario) -> np.ndarray:
    e0, ed, lo, up = _initial_vectors(s)
    total_w = np.sum(up - lo)
    if total_w <= 0:
        return lo
    r = min(max(np.sum(ed - e0 - lo) / total_w, 0.0), 1.0)
    return lo + (up - lo) * r


def cumulative_disagreement(s: Scenario, delta_e) -> np.ndarray:
    """Solve ``(I - W + J/n) s = g(0) - mean(g(0))`` for the summed deviations."""
    e0, ed, _, _ = _initial_vectors(s)
    g0 = e0 + np.asarray(delta_e, dtype=float) - ed
    n = s.node_count
    A = np.eye(n) - metropolis_matrix(s.graph) + np.full((n, n), 1.0 / n)
    try:
        return np.linalg.solve(A, g0 - g0.mean())
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(str(exc)) from exc


def distribution_fixed_point(s: Scenario, delta_e) -> np.ndarray:
    """Limit of ``h_ij`` per canonical edge, in ``graph.edges`` order."""
    cum = cumulative_disagreement(s, delta_e)
    W = metropolis_matrix(s.graph)
    return np.array([W[i - 1, j - 1] * (cum[j - 1] - cum[i - 1]) for i, j in s.graph.edges])


@dataclass(frozen=True)
class ReferenceHistory:
    z: np.ndarray  # (rounds+1, n)
    w: np.ndarray
    g: np.ndarray
    h: np.ndarray  # (rounds+1, n, n), antisymmetric in the last two axes


def power_iteration_reference(s: Scenario, rounds: int, delta_e=None) -> ReferenceHistory:
    """Brute-force dense histories of both iterations.

    ``delta_e`` seeds the surplus; by default the closed-form generation.
    """
    if rounds < 0:
        raise ValueError("rounds must be nonnegative")
    e0, ed, lo, up = _initial_vectors(s)
    if delta_e is None:
        delta_e = generation_fixed_point(s)
    P = generation_matrix(s.graph)
    W = metropolis_matrix(s.graph)
    A = W - np.diag(np.diag(W))  # off-diagonal Metropolis weights

    z = [ed - e0 - lo]
    w = [up - lo]
    g = [e0 + np.asarray(delta_e, dtype=float) - ed]
    H = [np.zeros((len(e0), len(e0)))]
    for _ in range(rounds):
        z.append(P @ z[-1])
        w.append(P @ w[-1])
        gt = g[-1]
        H.append(H[-1] + A * (gt[None, :] - gt[:, None]))
        g.append(W @ gt)
    return ReferenceHistory(np.array(z), np.array(w), np.array(g), np.array(H))
