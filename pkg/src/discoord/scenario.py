"""Scenario data model, demand-regime classification and the JSON file format.

A scenario file looks like::

    {
      "nodes": 3,
      "edges": [[1, 2], [2, 3]],
      "initial": [0, 1, 2],
      "desired": [1, 1, 1],
      "lower":   [0, 0, 0],
      "upper":   [1, 1, 1]
    }

All six fields are required; anything else at top level is rejected.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import (
    BoundViolation,
    DisconnectedGraph,
    LengthMismatch,
    MissingField,
    NonFiniteValue,
    ScenarioSyntaxError,
    UnknownField,
)
from .graph import Graph, build_graph, is_connected

VECTOR_FIELDS = ("initial", "desired", "lower", "upper")
FIELDS = ("nodes", "edges") + VECTOR_FIELDS

#: absolute tolerance used when comparing the regime sums
CLASSIFY_TOL = 1e-9


@dataclass(frozen=True)
class Scenario:
    graph: Graph
    initial: tuple[float, ...]
    desired: tuple[float, ...]
    lower: tuple[float, ...]
    upper: tuple[float, ...]

    def __post_init__(self):
        n = self.graph.node_count
        for name in VECTOR_FIELDS:
            values = tuple(float(v) for v in getattr(self, name))
            if len(values) != n:
                raise LengthMismatch(name, len(values), n)
            object.__setattr__(self, name, values)

    @property
    def node_count(self) -> int:
        return self.graph.node_count

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """``(initial, desired, lower, upper)`` as float64 arrays."""
        return tuple(np.array(getattr(self, name), dtype=float) for name in VECTOR_FIELDS)


def make_scenario(
    node_count: int,
    edges,
    initial: Sequence[float],
    desired: Sequence[float],
    lower: Sequence[float],
    upper: Sequence[float],
) -> Scenario:
    return Scenario(build_graph(node_count, edges), initial, desired, lower, upper)


class Regime(str, enum.Enum):
    BALANCED = "Balanced"
    UNDER_DEMAND = "UnderDemand"
    OVER_DEMAND = "OverDemand"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DemandRegime:
    tag: Regime
    no_generation_needed: bool
    min_supply: float  # sum(initial + lower)
    demand: float  # sum(desired)
    max_supply: float  # sum(initial + upper)

    def __str__(self):
        return f"{self.tag.value} (no generation needed)" if self.no_generation_needed else self.tag.value


def classify(s: Scenario, tol: float = CLASSIFY_TOL) -> DemandRegime:
    e0, ed, lo, up = s.arrays()
    min_supply = float(np.sum(e0 + lo))
    max_supply = float(np.sum(e0 + up))
    demand = float(np.sum(ed))
    if demand < min_supply - tol:
        tag = Regime.UNDER_DEMAND
    elif demand > max_supply + tol:
        tag = Regime.OVER_DEMAND
    else:
        tag = Regime.BALANCED
    no_gen = abs(float(np.sum(e0)) - demand) <= tol
    return DemandRegime(tag, no_gen, min_supply, demand, max_supply)


def validate(s: Scenario) -> DemandRegime:
    """Structural checks, then the regime.

    Unbalanced scenarios are classified, not rejected; the solver copes with
    them by saturating generation.
    """
    for name in VECTOR_FIELDS:
        for i, v in enumerate(getattr(s, name), start=1):
            if not math.isfinite(v):
                raise NonFiniteValue(i, name)
    for i, (lo, up) in enumerate(zip(s.lower, s.upper), start=1):
        if lo > up:
            raise BoundViolation(i, lo, up)
    if not is_connected(s.graph):
        raise DisconnectedGraph()
    return classify(s)


# -- file format -------------------------------------------------------------

def _reject_constant(name):
    raise ValueError(f"non-standard numeric literal {name}")


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def parse_scenario(text: str) -> Scenario:
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ScenarioSyntaxError(exc.lineno, exc.msg) from None
    except ValueError as exc:
        raise ScenarioSyntaxError(_first_line_of(text, ("NaN", "Infinity")), str(exc)) from None
    if not isinstance(data, dict):
        raise ScenarioSyntaxError(1, "top level must be an object")
    for key in data:
        if key not in FIELDS:
            raise UnknownField(key)
    for key in FIELDS:
        if key not in data:
            raise MissingField(key)

    n = data["nodes"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ScenarioSyntaxError(_first_line_of(text, ('"nodes"',)), "'nodes' must be a positive integer")
    edges = data["edges"]
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in e)
        for e in edges
    ):
        raise ScenarioSyntaxError(_first_line_of(text, ('"edges"',)), "'edges' must be a list of [i, j] integer pairs")
    vectors = {}
    for name in VECTOR_FIELDS:
        values = data[name]
        if not isinstance(values, list) or not all(_is_number(v) for v in values):
            raise ScenarioSyntaxError(_first_line_of(text, (f'"{name}"',)), f"'{name}' must be a list of numbers")
        if len(values) != n:
            raise LengthMismatch(name, len(values), n)
        vectors[name] = values
    return make_scenario(n, [tuple(e) for e in edges], **vectors)


def _first_line_of(text: str, needles) -> int:
    for lineno, line in enumerate(text.splitlines(), start=1):
        if any(x in line for x in needles):
            return lineno
    return 1


def serialize_scenario(s: Scenario) -> str:
    # json writes floats with repr(), which round-trips exactly
    lines = [
        "{",
        f'  "nodes": {s.node_count},',
        f'  "edges": {json.dumps([list(e) for e in s.graph.edges])},',
    ]
    for k, name in enumerate(VECTOR_FIELDS):
        sep = "," if k < len(VECTOR_FIELDS) - 1 else ""
        lines.append(f'  "{name}": {json.dumps(list(getattr(s, name)))}{sep}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_scenario(path) -> Scenario:
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


def save_scenario(s: Scenario, path) -> None:
    Path(path).write_text(serialize_scenario(s), encoding="utf-8")
