import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from mixedlap import load_graph
from mixedlap.graph import Edge, MixedGraph

FIXTURE_DIR = Path(__file__).resolve().parents[1] / "src" / "mixedlap" / "fixtures"


def fixture_path(name):
    return FIXTURE_DIR / f"{name}.graph"


@pytest.fixture
def diamond_sp():
    return load_graph(fixture_path("diamond_sp").read_text())


@pytest.fixture
def diamond_mixed():
    return load_graph(fixture_path("diamond_mixed").read_text())


@pytest.fixture
def square_psi4():
    return load_graph(fixture_path("square_psi4").read_text())


@pytest.fixture
def square_mixed():
    return load_graph(fixture_path("square_mixed").read_text())


@st.composite
def mixed_graphs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = []
    for u, v in chosen:
        kind = draw(st.integers(0, 2))
        edges.append(Edge.undirected(u, v) if kind == 0 else Edge.arc(u, v) if kind == 1 else Edge.arc(v, u))
    return MixedGraph(n, tuple(edges))


def random_graph(rng: random.Random, n, p=0.5):
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                k = rng.randrange(3)
                edges.append(Edge.undirected(u, v) if k == 0 else Edge.arc(u, v) if k == 1 else Edge.arc(v, u))
    return MixedGraph(n, tuple(edges))


def to_numpy(M):
    import numpy as np

    return np.array([[complex(x.to_complex()) for x in row] for row in M.entries], dtype=complex).reshape(M.shape)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
