"""Distributed energy distribution by average consensus on the surplus.

Each node's surplus ``g = initial + generated - desired`` is averaged with
Metropolis weights, and every edge keeps a running total ``h`` of what moved
across it. Sign convention: ``h_ij`` is the net energy *received by node i*
from node j, so ``achieved_i = initial_i + generated_i + sum_j h_ij``. A
positive ``h_ij`` is reported as a flow j -> i.

``h`` has one slot per canonical edge ``(i, j)`` with ``i < j``; reading the
ordered pair ``(j, i)`` negates it, so antisymmetry cannot be violated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import ConvergenceConfig
from .errors import NotConverged
from .graph import Graph, edge_weights
from .scenario import Scenario


@dataclass(frozen=True)
class DistributionState:
    g: np.ndarray
    h: np.ndarray  # aligned with graph.edges
    round: int = 0


def flow(graph: Graph, h: np.ndarray, i: int, j: int) -> float:
    """Net energy received by node ``i`` from node ``j``."""
    k = graph.edge_index(i, j)
    return float(h[k]) if i < j else -float(h[k])


@dataclass(frozen=True)
class FlowResult:
    graph: Graph = field(repr=False)
    flows: np.ndarray  # h_ij(inf) per canonical edge
    achieved: np.ndarray
    residuals: np.ndarray
    total_flow: float
    rounds_used: int
    converged: bool
    trace: list = field(default_factory=list, repr=False, compare=False)

    def flow(self, i: int, j: int) -> float:
        return flow(self.graph, self.flows, i, j)

    def directed_flows(self) -> list[tuple[int, int, float]]:
        """Positive flows as ``(source, sink, magnitude)``, canonical edge order."""
        out = []
        for (i, j), h in zip(self.graph.edges, self.flows):
            if h > 0:
                out.append((j, i, float(h)))
            elif h < 0:
                out.append((i, j, float(-h)))
        return out


def init_distribution(s: Scenario, delta_e) -> DistributionState:
    e0, ed, _, _ = s.arrays()
    g0 = e0 + np.asarray(delta_e, dtype=float) - ed
    return DistributionState(g=g0, h=np.zeros(s.graph.edge_count), round=0)


def distribution_step(state: DistributionState, graph: Graph, weights: np.ndarray | None = None) -> DistributionState:
    a = edge_weights(graph) if weights is None else weights
    src, dst = graph.src, graph.dst
    n = len(state.g)
    moved = a * (state.g[dst] - state.g[src])
    g = state.g + np.bincount(src, moved, minlength=n) - np.bincount(dst, moved, minlength=n)
    return DistributionState(g, state.h + moved, state.round + 1)


def achieved_energies(s: Scenario, delta_e, flows) -> np.ndarray:
    e0, _, _, _ = s.arrays()
    n = s.node_count
    flows = np.asarray(flows, dtype=float)
    g = s.graph
    return (
        e0
        + np.asarray(delta_e, dtype=float)
        + np.bincount(g.src, flows, minlength=n)
        - np.bincount(g.dst, flows, minlength=n)
    )


def residual_errors(s: Scenario, achieved) -> np.ndarray:
    return np.array(s.desired) - np.asarray(achieved, dtype=float)


def _trace_rows(state: DistributionState, graph: Graph):
    rows = [(state.round, f"{i}", float(v)) for i, v in enumerate(state.g, start=1)]
    rows += [(state.round, f"{i}-{j}", float(v)) for (i, j), v in zip(graph.edges, state.h)]
    return rows


def run_distribution(
    s: Scenario, delta_e, cfg: ConvergenceConfig | None = None, *, strict: bool = False
) -> FlowResult:
    """Run the surplus averaging to its fixed point and read off the edge flows.

    Stops once the round's max-norm change in ``g`` and the spread
    ``max(g) - min(g)`` are both below ``cfg.tolerance``; the conserved mean
    lies inside that spread, so every node is then within tolerance of it.

    Trace rows are ``(round, item, value)``: ``item`` is a node index for g
    rows and ``"i-j"`` for h rows.
    """
    cfg = cfg or ConvergenceConfig()
    graph = s.graph
    a = edge_weights(graph)
    state = init_distribution(s, delta_e)
    trace = _trace_rows(state, graph) if cfg.trace_every else []

    converged = False
    while state.round < cfg.max_rounds:
        nxt = distribution_step(state, graph, a)
        change = np.max(np.abs(nxt.g - state.g), initial=0.0)
        state = nxt
        if cfg.sampled(state.round):
            trace.extend(_trace_rows(state, graph))
        if change < cfg.tolerance and np.ptp(state.g) < cfg.tolerance:
            converged = True
            break
    if cfg.trace_every and not cfg.sampled(state.round):
        trace.extend(_trace_rows(state, graph))

    achieved = achieved_energies(s, delta_e, state.h)
    result = FlowResult(
        graph=graph,
        flows=state.h,
        achieved=achieved,
        residuals=residual_errors(s, achieved),
        total_flow=float(np.abs(state.h).sum()),
        rounds_used=state.round,
        converged=converged,
        trace=trace,
    )
    if strict and not converged:
        raise NotConverged(result, "distribution")
    return result
