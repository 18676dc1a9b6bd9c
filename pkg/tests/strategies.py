"""Hypothesis generators for small connected graphs."""

from __future__ import annotations

import string

from hypothesis import strategies as st

from geodom import Graph

_LABELS = string.ascii_lowercase


def _build(n: int, parents: list[int], extra: list[tuple[int, int]]) -> Graph:
    # attachment tree guarantees connectivity; extras may duplicate
    edges = {(parents[i - 1], i) for i in range(1, n)}
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    labels = list(_LABELS[:n])
    return Graph(
        ((labels[u], labels[v]) for u, v in sorted(edges)), vertices=labels
    )


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    extra = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=2 * n,
        )
    )
    return _build(n, parents, extra)


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return _build(n, parents, [])


@st.composite
def graphs_with_vertex(draw, min_n: int = 2, max_n: int = 7) -> tuple[Graph, int]:
    g = draw(connected_graphs(min_n, max_n))
    return g, draw(st.integers(0, g.n - 1))


@st.composite
def graphs_vertex_and_set(
    draw, min_n: int = 2, max_n: int = 7
) -> tuple[Graph, int, frozenset[int]]:
    g, x = draw(graphs_with_vertex(min_n, max_n))
    members = draw(st.frozensets(st.integers(0, g.n - 1), max_size=g.n))
    return g, x, members
