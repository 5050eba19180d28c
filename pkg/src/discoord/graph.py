"""Undirected network topology and the two consensus weight schemes.

Nodes are numbered ``1..node_count`` everywhere in the public API. Edges are
stored once each as ``(min, max)`` pairs, sorted, so the order edges were
given in never leaks into results.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import DuplicateEdge, NodeOutOfRange, NotAnEdge, SelfLoop


@dataclass(frozen=True)
class Graph:
    node_count: int
    edges: tuple[tuple[int, int], ...]
    _adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    # 0-based endpoint arrays aligned with ``edges``; read-only, used by the vectorised steps
    @cached_property
    def src(self) -> np.ndarray:
        return _frozen([i - 1 for i, _ in self.edges], np.intp)

    @cached_property
    def dst(self) -> np.ndarray:
        return _frozen([j - 1 for _, j in self.edges], np.intp)

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen([len(a) for a in self._adjacency], float)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def neighbors(self, i: int) -> frozenset[int]:
        self._check(i)
        return self._adjacency[i - 1]

    def has_edge(self, i: int, j: int) -> bool:
        self._check(i)
        self._check(j)
        return j in self._adjacency[i - 1]

    def edge_index(self, i: int, j: int) -> int:
        """Position of the canonical edge ``{i, j}`` in :attr:`edges`."""
        if not self.has_edge(i, j):
            raise NotAnEdge(i, j)
        return self._edge_pos[(min(i, j), max(i, j))]

    @cached_property
    def _edge_pos(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    def _check(self, i: int) -> None:
        if not (isinstance(i, (int, np.integer)) and 1 <= i <= self.node_count):
            raise NodeOutOfRange(i, self.node_count)


def _frozen(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.flags.writeable = False
    return arr


def build_graph(node_count: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    if int(node_count) != node_count or node_count < 1:
        raise ValueError(f"node_count must be a positive integer, got {node_count!r}")
    node_count = int(node_count)
    seen: set[tuple[int, int]] = set()
    adjacency: list[set[int]] = [set() for _ in range(node_count)]
    for pair in edge_list:
        i, j = pair
        for v in (i, j):
            if not (isinstance(v, (int, np.integer)) and 1 <= v <= node_count):
                raise NodeOutOfRange(v, node_count)
        i, j = int(i), int(j)
        if i == j:
            raise SelfLoop(i)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdge(i, j)
        seen.add(key)
        adjacency[i - 1].add(j)
        adjacency[j - 1].add(i)
    return Graph(node_count, tuple(sorted(seen)), tuple(frozenset(a) for a in adjacency))


def neighbors(g: Graph, i: int) -> frozenset[int]:
    return g.neighbors(i)


def is_connected(g: Graph) -> bool:
    """True iff every node is reachable from node 1."""
    seen = {1}
    todo = deque([1])
    while todo:
        for j in g.neighbors(todo.popleft()):
            if j not in seen:
                seen.add(j)
                todo.append(j)
    return len(seen) == g.node_count


def generation_weight(g: Graph, j: int) -> float:
    """Share ``1/(1+|N_j|)`` that node j pushes to itself and to each neighbour."""
    return 1.0 / (1 + g.degree(j))


def metropolis_weight(g: Graph, i: int, j: int) -> float:
    if not g.has_edge(i, j):
        raise NotAnEdge(i, j)
    return 1.0 / (1 + max(g.degree(i), g.degree(j)))


def edge_weights(g: Graph) -> np.ndarray:
    """Metropolis weight of every canonical edge, aligned with ``g.edges``."""
    deg = g.degrees
    return 1.0 / (1.0 + np.maximum(deg[g.src], deg[g.dst]))
