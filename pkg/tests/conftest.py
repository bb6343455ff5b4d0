"""Shared fixtures and hypothesis strategies."""

import hypothesis.strategies as st
import pytest

from clique_blowup import Graph, default_corpus


@st.composite
def connected_graphs(draw, min_vertices=2, max_vertices=8):
    """Random connected graph: a random tree plus extra edges."""
    n = draw(st.integers(min_vertices, max_vertices))
    edges = set()
    for i in range(1, n):
        parent = draw(st.integers(0, i - 1))
        edges.add((parent, i))
    candidates = sorted(
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges
    )
    if candidates:
        extra = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=len(candidates)))
        edges.update(extra)
    return Graph(n, sorted(edges))


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()
