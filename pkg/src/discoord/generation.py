"""Distributed energy generation by ratio consensus.

Every node starts with two numbers: its unmet demand above the lower bound,
``z = desired - initial - lower``, and its capacity band, ``w = upper - lower``.
Each round a node keeps ``1/(1+deg)`` of its values and pushes the same share
to each neighbour. The mixing matrix is column-stochastic, so both sums are
conserved, and on a connected graph every ``z_i/w_i`` converges to
``sum(z)/sum(w)``. Node i then generates ``lower_i + (upper_i - lower_i) * ratio``
with the ratio clamped to ``[0, 1]``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .config import ConvergenceConfig
from .errors import NotConverged, ZeroCapacityWarning
from .graph import Graph
from .scenario import Scenario

# below this a node's capacity estimate is treated as zero
W_FLOOR = 1e-12
# ratios within this many tolerances of 0 or 1 are treated as saturated
RATIO_SNAP = 10


@dataclass(frozen=True)
class GenerationState:
    z: np.ndarray
    w: np.ndarray
    round: int = 0


@dataclass(frozen=True)
class GenerationResult:
    delta_e: np.ndarray
    rounds_used: int
    converged: bool
    ratio: float  # common limit of z_i/w_i before clamping
    trace: list = field(default_factory=list, repr=False, compare=False)


def init_generation(s: Scenario) -> GenerationState:
    e0, ed, lo, up = s.arrays()
    return GenerationState(z=ed - e0 - lo, w=up - lo, round=0)


def _push(x: np.ndarray, g: Graph) -> np.ndarray:
    share = x / (1.0 + g.degrees)
    out = share.copy()
    np.add.at(out, g.src, share[g.dst])
    np.add.at(out, g.dst, share[g.src])
    return out


def generation_step(state: GenerationState, g: Graph) -> GenerationState:
    return GenerationState(_push(state.z, g), _push(state.w, g), state.round + 1)


def _ratio_spread(state: GenerationState) -> float:
    """Disagreement of the per-node ratios, relative once they exceed 1 in size."""
    # a node that has not heard of any capacity yet has no ratio to agree on
    if np.any(state.w <= 0.0):
        return np.inf
    ratios = state.z / state.w
    return float(np.ptp(ratios) / max(1.0, np.max(np.abs(ratios))))


def _trace_rows(state: GenerationState):
    return [(state.round, i, float(z), float(w)) for i, (z, w) in enumerate(zip(state.z, state.w), start=1)]


def run_generation(s: Scenario, cfg: ConvergenceConfig | None = None, *, strict: bool = False) -> GenerationResult:
    """Iterate to a fixed point and turn the per-node ratios into generation.

    A run has converged once the per-round max-norm change of both ``z`` and
    ``w`` is below ``cfg.tolerance`` *and* the nodes' ratios ``z_i/w_i`` agree
    to within ``cfg.tolerance`` (relative, for ratios larger than 1). The second condition matters on slowly mixing
    graphs, where a small step can still leave the ratios tens of tolerances
    apart.

    With ``strict=True`` a run that exhausts ``max_rounds`` raises
    :class:`NotConverged` carrying the partial result; otherwise the result is
    returned with ``converged=False``.
    """
    cfg = cfg or ConvergenceConfig()
    _, _, lo, up = s.arrays()
    state = init_generation(s)
    total_z, total_w = float(state.z.sum()), float(state.w.sum())
    trace = _trace_rows(state) if cfg.trace_every else []

    if total_w <= W_FLOOR:
        # every band is (numerically) empty: the ratio is undefined and the answer is forced
        if abs(total_z) > W_FLOOR:
            warnings.warn(
                f"demand above lower bounds is {total_z:g} but total capacity is zero",
                ZeroCapacityWarning,
                stacklevel=2,
            )
        return GenerationResult(lo.copy(), 0, True, 0.0, trace)

    # conserved sums pin the common limit of z_i/w_i exactly
    network_ratio = total_z / total_w
    converged = False
    while state.round < cfg.max_rounds:
        nxt = generation_step(state, s.graph)
        dz = np.max(np.abs(nxt.z - state.z), initial=0.0)
        dw = np.max(np.abs(nxt.w - state.w), initial=0.0)
        state = nxt
        if cfg.sampled(state.round):
            trace.extend(_trace_rows(state))
        if dz < cfg.tolerance and dw < cfg.tolerance and _ratio_spread(state) < cfg.tolerance:
            converged = True
            break
    if cfg.trace_every and not cfg.sampled(state.round):
        trace.extend(_trace_rows(state))

    safe = state.w > W_FLOOR
    ratios = np.full(s.node_count, network_ratio)
    ratios[safe] = state.z[safe] / state.w[safe]
    # the ratio is only resolved to ~tolerance; inside that band a bound is a bound
    snap = RATIO_SNAP * cfg.tolerance
    ratios[np.abs(ratios) <= snap] = 0.0
    ratios[np.abs(ratios - 1.0) <= snap] = 1.0
    ratios = np.clip(ratios, 0.0, 1.0)
    delta_e = np.clip(lo + (up - lo) * ratios, lo, up)
    # saturated nodes sit exactly on their bound, not an ulp inside it
    delta_e = np.where(ratios == 1.0, up, np.where(ratios == 0.0, lo, delta_e))

    result = GenerationResult(delta_e, state.round, converged, network_ratio, trace)
    if strict and not converged:
        raise NotConverged(result, "generation")
    return result


def network_ratio(s: Scenario) -> float:
    """Unclamped ``sum(z(0)) / sum(w(0))``, or nan when there is no capacity."""
    st = init_generation(s)
    total_w = st.w.sum()
    return float(st.z.sum() / total_w) if total_w > W_FLOOR else float("nan")

