import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from discoord import Regime, classify, load_scenario, make_scenario, parse_scenario, serialize_scenario, validate
from discoord.errors import (
    BoundViolation,
    DisconnectedGraph,
    DuplicateEdge,
    LengthMismatch,
    MissingField,
    NonFiniteValue,
    ScenarioSyntaxError,
    UnknownField,
)
from discoord.random_scenarios import random_scenario

from conftest import CASE_EDGES, case_path, scenarios


def test_case1_fixture(case1):
    assert case1.initial[3] == 2.0
    assert case1.node_count == 6
    assert case1.graph.edges == tuple(sorted(CASE_EDGES))


@pytest.mark.parametrize(
    "k, tag, no_gen, sums",
    [
        (1, Regime.BALANCED, False, (32, 92, 117)),
        (2, Regime.UNDER_DEMAND, False, (110, 92, 195)),
        (3, Regime.OVER_DEMAND, False, (32, 145, 117)),
        (4, Regime.BALANCED, True, (92, 92, 177)),
    ],
)
def test_regimes(k, tag, no_gen, sums):
    r = validate(load_scenario(case_path(k)))
    assert r.tag is tag
    assert r.no_generation_needed is no_gen
    assert (r.min_supply, r.demand, r.max_supply) == sums


def test_regime_boundaries_are_balanced():
    # equality at either end of the band is still balanced
    lo_edge = make_scenario(2, [(1, 2)], [1, 1], [3, 3], [1, 1], [2, 2])
    hi_edge = make_scenario(2, [(1, 2)], [1, 1], [6, 6], [1, 1], [5, 5])
    assert classify(lo_edge).tag is Regime.BALANCED
    assert classify(hi_edge).tag is Regime.BALANCED
    nudged = make_scenario(2, [(1, 2)], [1, 1], [6, 6 + 1e-6], [1, 1], [5, 5])
    assert classify(nudged).tag is Regime.OVER_DEMAND


def test_validate_rejects_structural_problems():
    with pytest.raises(DisconnectedGraph):
        validate(make_scenario(3, [(1, 2)], [0] * 3, [0] * 3, [0] * 3, [1] * 3))
    with pytest.raises(BoundViolation) as exc:
        validate(make_scenario(2, [(1, 2)], [0, 0], [0, 0], [0, 2], [1, 1]))
    assert exc.value.node == 2
    with pytest.raises(NonFiniteValue) as exc:
        validate(make_scenario(2, [(1, 2)], [0, float("nan")], [0, 0], [0, 0], [1, 1]))
    assert (exc.value.node, exc.value.field) == (2, "initial")


def _case1_dict():
    return json.loads(case_path(1).read_text())


def test_parse_length_mismatch():
    d = _case1_dict()
    d["desired"] = d["desired"][:5]
    with pytest.raises(LengthMismatch) as exc:
        parse_scenario(json.dumps(d))
    assert exc.value.field == "desired"


def test_parse_missing_and_unknown_fields():
    d = _case1_dict()
    del d["edges"]
    with pytest.raises(MissingField) as exc:
        parse_scenario(json.dumps(d))
    assert exc.value.field == "edges"

    d = _case1_dict()
    d["uper"] = d["upper"]
    with pytest.raises(UnknownField):
        parse_scenario(json.dumps(d))


def test_parse_syntax_error_reports_line():
    text = case_path(1).read_text()
    truncated = "\n".join(text.splitlines()[:4])
    with pytest.raises(ScenarioSyntaxError) as exc:
        parse_scenario(truncated)
    assert exc.value.line >= 4


@pytest.mark.parametrize(
    "patch",
    [
        {"nodes": 0},
        {"nodes": True},
        {"edges": [[1, 2, 3]]},
        {"edges": [[1.5, 2]]},
        {"initial": [0, 10, 10, "2", 0, 10]},
        {"lower": [0, 0, 0, 0, 0, False]},
    ],
)
def test_parse_rejects_bad_types(patch):
    d = _case1_dict()
    d.update(patch)
    with pytest.raises(ScenarioSyntaxError):
        parse_scenario(json.dumps(d))


def test_parse_rejects_nan_literal():
    text = case_path(1).read_text().replace('"initial": [0,', '"initial": [NaN,')
    with pytest.raises(ScenarioSyntaxError) as exc:
        parse_scenario(text)
    assert exc.value.line == 4


def test_parse_propagates_graph_errors():
    d = _case1_dict()
    d["edges"].append([2, 1])
    with pytest.raises(DuplicateEdge):
        parse_scenario(json.dumps(d))


def test_serialize_case1_lists_all_edges(case1):
    text = serialize_scenario(case1)
    assert json.loads(text)["edges"] == [list(e) for e in sorted(CASE_EDGES)]


def test_single_node_round_trip():
    s = make_scenario(1, [], [1.5], [2], [0], [1])
    text = serialize_scenario(s)
    assert parse_scenario(text) == s
    assert json.loads(text)["edges"] == []


def test_round_trip_fixtures(case_no):
    s = load_scenario(case_path(case_no))
    assert parse_scenario(serialize_scenario(s)) == s


def test_round_trip_random_exact():
    rng = np.random.default_rng(12345)
    for _ in range(100):
        s = random_scenario(rng, 1, 10)
        assert parse_scenario(serialize_scenario(s)) == s


@given(scenarios(connected=False))
def test_round_trip_property(s):
    assert parse_scenario(serialize_scenario(s)) == s


@given(scenarios(min_nodes=2), st.data())
def test_classification_invariant_under_relabeling(s, data):
    n = s.node_count
    perm = data.draw(st.permutations(range(1, n + 1)))  # old label k -> perm[k-1]
    inv = {new: k for k, new in enumerate(perm)}
    order = [inv[new] for new in range(1, n + 1)]
    relabeled = make_scenario(
        n,
        [(perm[i - 1], perm[j - 1]) for i, j in s.graph.edges],
        [s.initial[k] for k in order],
        [s.desired[k] for k in order],
        [s.lower[k] for k in order],
        [s.upper[k] for k in order],
    )
    a, b = validate(s), validate(relabeled)
    assert a.tag is b.tag
    assert a.no_generation_needed == b.no_generation_needed
