from pathlib import Path

import pytest
from hypothesis import strategies as st

from spath import build_graph, parse_graph_file

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

G1_TRIPLES = [("a", "b", 1.0), ("a", "c", 4.0), ("b", "c", 2.0), ("b", "z", 6.0), ("c", "z", 3.0)]


@pytest.fixture
def g1():
    return build_graph(G1_TRIPLES)


@pytest.fixture
def single_edge():
    return build_graph([("a", "z", 5.0)])


@pytest.fixture
def edgeless():
    return build_graph([], vertices=["a", "z"])


@pytest.fixture
def two_cycle():
    return build_graph([("a", "z", 2.0), ("z", "a", 7.0)])


@pytest.fixture
def g1_file():
    return DATA / "g1.graph"


@pytest.fixture
def edgeless_file():
    return DATA / "edgeless.graph"


def load(name):
    return parse_graph_file((DATA / name).read_text())


grid_weights = st.integers(1, 40).map(lambda k: k * 0.25)


@st.composite
def graphs(draw, min_n=1, max_n=7, mode=None):
    """Small graphs on v0..v{n-1} with quarter-grid weights."""
    n = draw(st.integers(min_n, max_n))
    mode = mode or draw(st.sampled_from(["directed", "undirected"]))
    names = [f"v{i}" for i in range(n)]
    if mode == "directed":
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    else:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    triples = [(names[i], names[j], draw(grid_weights)) for i, j in sorted(chosen)]
    return build_graph(triples, mode=mode, vertices=names)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
