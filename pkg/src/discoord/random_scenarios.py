"""Random connected scenarios for sweeps and property checks."""

from __future__ import annotations

import numpy as np

from .scenario import Scenario, make_scenario


def random_connected_edges(rng: np.random.Generator, n: int, extra_p: float = 0.3) -> list[tuple[int, int]]:
    """A random spanning tree plus each remaining pair with probability ``extra_p``."""
    order = rng.permutation(n) + 1
    edges = set()
    for k in range(1, n):
        parent = order[rng.integers(0, k)]
        a, b = int(order[k]), int(parent)
        edges.add((min(a, b), max(a, b)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in edges and rng.random() < extra_p:
                edges.add((i, j))
    return sorted(edges)


def random_scenario(
    rng: np.random.Generator,
    n_min: int = 2,
    n_max: int = 8,
    scale: float = 50.0,
) -> Scenario:
    n = int(rng.integers(n_min, n_max + 1))
    edges = random_connected_edges(rng, n, extra_p=float(rng.uniform(0.0, 0.6)))
    lower = rng.uniform(0, scale / 2, n)
    upper = lower + rng.uniform(0, scale, n)
    # occasionally collapse a band to exercise zero-capacity nodes
    flat = rng.random(n) < 0.15
    upper[flat] = lower[flat]
    initial = rng.uniform(0, scale, n)
    desired = rng.uniform(0, 2 * scale, n)
    return make_scenario(n, edges, initial, desired, lower, upper)
