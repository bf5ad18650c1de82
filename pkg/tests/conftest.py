import pytest
from hypothesis import strategies as st

from oddcluster import generators as gen
from oddcluster.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n < 2:
        return Graph(n, [])
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs)))
    return Graph(n, sorted(edges))


@st.composite
def connected_graphs(draw, min_n=1, max_n=10):
    return gen.chain_components(draw(graphs(min_n=min_n, max_n=max_n)))


@st.composite
def graphs_with_terminals(draw, max_n=10, max_terminals=4):
    g = draw(connected_graphs(min_n=1, max_n=max_n))
    k = draw(st.integers(min_value=1, max_value=min(max_terminals, g.n)))
    terms = draw(st.sets(st.integers(min_value=0, max_value=g.n - 1), min_size=k, max_size=k))
    return g, frozenset(terms)


@pytest.fixture
def k4():
    return gen.complete(4)


@pytest.fixture
def k5():
    return gen.complete(5)


@pytest.fixture
def c5():
    return gen.cycle(5)


@pytest.fixture
def c6():
    return gen.cycle(6)
