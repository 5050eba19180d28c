from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from discoord import load_scenario, make_scenario

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"

CASE_EDGES = [(1, 2), (2, 3), (3, 4), (1, 5), (3, 5), (4, 5), (4, 6)]

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def case_path(k: int) -> Path:
    return SCENARIOS / f"case{k}.json"


@pytest.fixture(params=[1, 2, 3, 4], ids=lambda k: f"case{k}")
def case_no(request):
    return request.param


@pytest.fixture
def case1():
    return load_scenario(case_path(1))


@pytest.fixture
def case2():
    return load_scenario(case_path(2))


@pytest.fixture
def case3():
    return load_scenario(case_path(3))


@pytest.fixture
def case4():
    return load_scenario(case_path(4))


@pytest.fixture
def case1_graph(case1):
    return case1.graph


# -- hypothesis strategies ---------------------------------------------------

energy = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)


@st.composite
def connected_edges(draw, n):
    edges = set()
    for k in range(2, n + 1):
        parent = draw(st.integers(1, k - 1))
        edges.add((parent, k))
    extra = draw(st.sets(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=2 * n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    # shuffle labels so the tree is not always rooted at node 1
    perm = draw(st.permutations(range(1, n + 1)))
    return sorted({tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in edges})


@st.composite
def scenarios(draw, min_nodes=1, max_nodes=8, connected=True):
    n = draw(st.integers(min_nodes, max_nodes))
    if connected:
        edges = draw(connected_edges(n))
    else:
        pairs = st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] != p[1])
        edges = sorted({(min(a, b), max(a, b)) for a, b in draw(st.lists(pairs, max_size=2 * n))})
    vec = st.lists(energy, min_size=n, max_size=n)
    lower = draw(st.lists(st.floats(0, 50), min_size=n, max_size=n))
    band = draw(st.lists(st.floats(0, 50), min_size=n, max_size=n))
    upper = [lo + b for lo, b in zip(lower, band)]
    return make_scenario(n, edges, draw(vec), draw(vec), lower, upper)


def assert_close(actual, expected, tol):
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    assert actual.shape == expected.shape
    err = np.max(np.abs(actual - expected), initial=0.0)
    assert err <= tol, f"max error {err:.3g} > {tol:g}\nactual={actual}\nexpected={expected}"
