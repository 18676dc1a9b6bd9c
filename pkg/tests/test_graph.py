import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodom import (
    DisconnectedError,
    Graph,
    GraphError,
    ParseError,
    VertexSet,
    all_pairs,
    bfs_distances,
    complete_graph,
    cycle_graph,
    emit_graph,
    geodetic_closure,
    interval,
    is_connected,
    is_geodetic,
    parse_graph,
    path_graph,
    simplicial_vertices,
    star_graph,
)
from helpers import floyd_warshall, geodesic_vertices_by_paths
from strategies import connected_graphs


# ---------------------------------------------------------------------------
# parsing and emission


def test_parse_basic_document():
    text = "\n".join(
        [
            "# a commented header",
            "",
            "vertices: d a",
            "a b",
            "b c",
            "  c d  ",
        ]
    )
    g = parse_graph(text)
    assert g.labels == ("a", "b", "c", "d")
    assert g.edge_count == 3
    assert g.has_edge(g.index_of("c"), g.index_of("d"))


def test_parse_declared_only_vertices():
    g = parse_graph("vertices: x y z\n")
    assert g.n == 3 and g.edge_count == 0
    assert not is_connected(g)


def test_parse_duplicate_edges_collapse():
    g = parse_graph("a b\nb a\na b\n")
    assert g.edge_count == 1


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("a b c\n", "line 1"),
        ("a b\nx\n", "line 2"),
        ("a a\n", "self-loop"),
        ("", "empty vertex set"),
        ("# nothing but comments\n", "empty vertex set"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_graph(text)


def test_emit_round_trip_fixed():
    g = parse_graph("vertices: q\na b\nb c\n")
    assert parse_graph(emit_graph(g)) == g
    assert emit_graph(g).endswith("\n")


@given(connected_graphs())
def test_emit_round_trip(g):
    assert parse_graph(emit_graph(g)) == g


# ---------------------------------------------------------------------------
# construction invariants


def test_labels_sorted_and_indexed():
    g = Graph([("zz", "aa"), ("mm", "aa")])
    assert g.labels == ("aa", "mm", "zz")
    assert g.index_of("mm") == 1
    assert g.label(2) == "zz"
    assert g.labels_of([2, 0]) == ["zz", "aa"]


def test_adjacency_sorted_and_symmetric():
    g = Graph([("c", "a"), ("c", "b"), ("a", "b")])
    for v in range(g.n):
        assert list(g.neighbors(v)) == sorted(g.neighbors(v))
        for w in g.neighbors(v):
            assert g.has_edge(w, v)
    assert g.degree(0) == 2
    assert list(g.edges()) == [(0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize(
    "edges",
    [[("a", "a")], [("a b", "c")], [("", "c")]],
)
def test_construction_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        Graph(edges)


def test_construction_rejects_empty():
    with pytest.raises(GraphError, match="empty"):
        Graph()


def test_construction_rejects_bad_declared_label():
    with pytest.raises(GraphError):
        Graph([("a", "b")], vertices=["ok", "not ok"])


def test_equality_ignores_input_order():
    g1 = Graph([("a", "b"), ("b", "c")])
    g2 = Graph([("c", "b"), ("b", "a")])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != Graph([("a", "b"), ("a", "c")])


def test_index_of_unknown_label():
    g = Graph([("a", "b")])
    with pytest.raises(ValueError, match="unknown vertex"):
        g.index_of("zz")


def test_repr_mentions_size():
    assert repr(Graph([("a", "b")])) == "Graph(n=2, m=1)"


# ---------------------------------------------------------------------------
# VertexSet


def test_vertex_set_of_normalizes():
    vs = VertexSet.of([3, 1, 1, 2], 5)
    assert vs.members == (1, 2, 3)
    assert list(vs) == [1, 2, 3]
    assert len(vs) == 3 and 2 in vs and 0 not in vs
    assert vs and not VertexSet.of([], 5)


@pytest.mark.parametrize("members", [(2, 1), (0, 0), (-1,), (5,)])
def test_vertex_set_validates(members):
    with pytest.raises(ValueError):
        VertexSet(members, 5)


def test_vertex_set_issubset():
    vs = VertexSet.of([1, 3], 5)
    assert vs.issubset([0, 1, 2, 3])
    assert vs.issubset(VertexSet.of([1, 3], 5))
    assert not vs.issubset([1, 2])


# ---------------------------------------------------------------------------
# distances


@given(connected_graphs())
def test_all_pairs_matches_floyd_warshall(g):
    dm = all_pairs(g)
    assert dm.d.tolist() == floyd_warshall(g)


@given(connected_graphs())
def test_distance_matrix_shape_properties(g):
    dm = all_pairs(g)
    assert dm.n == g.n
    assert np.array_equal(dm.d, dm.d.T)
    assert np.all(np.diag(dm.d) == 0)


def test_bfs_distances_row():
    g = path_graph(["a", "b", "c", "d"])
    assert bfs_distances(g, 0).tolist() == [0, 1, 2, 3]
    with pytest.raises(ValueError, match="out of range"):
        bfs_distances(g, 9)


def test_disconnected_raises():
    g = parse_graph("vertices: z\na b\n")
    assert not is_connected(g)
    with pytest.raises(DisconnectedError):
        bfs_distances(g, 0)
    with pytest.raises(DisconnectedError):
        all_pairs(g)


def test_matrix_is_read_only():
    dm = all_pairs(path_graph(3))
    with pytest.raises(ValueError):
        dm.d[0, 0] = 7


def test_cycle_distances():
    g = cycle_graph(6)
    dm = all_pairs(g)
    assert [dm.dist(0, k) for k in range(6)] == [0, 1, 2, 3, 2, 1]


# ---------------------------------------------------------------------------
# intervals and closures


@settings(max_examples=60)
@given(connected_graphs(max_n=6), st.data())
def test_interval_matches_path_enumeration(g, data):
    dm = all_pairs(g)
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    assert set(interval(g, dm, u, v)) == geodesic_vertices_by_paths(g, u, v)


def test_interval_examples():
    p4 = path_graph(["a", "b", "c", "d"])
    dm = all_pairs(p4)
    assert list(interval(p4, dm, 0, 3)) == [0, 1, 2, 3]
    c5 = cycle_graph(5)
    dm5 = all_pairs(c5)
    assert list(interval(c5, dm5, 0, 2)) == [0, 1, 2]
    c6 = cycle_graph(6)
    # antipodal pair: both arcs are geodesics
    assert len(interval(c6, all_pairs(c6), 0, 3)) == 6


def test_interval_validates_inputs():
    g = path_graph(4)
    dm = all_pairs(g)
    with pytest.raises(ValueError):
        interval(g, dm, 0, 9)
    with pytest.raises(ValueError):
        interval(g, all_pairs(path_graph(3)), 0, 1)


def test_closure_rejects_empty():
    g = path_graph(3)
    with pytest.raises(ValueError, match="empty"):
        geodetic_closure(g, all_pairs(g), [])


@given(connected_graphs(), st.data())
def test_closure_contains_seed_and_is_monotone(g, data):
    dm = all_pairs(g)
    small = data.draw(st.frozensets(st.integers(0, g.n - 1), min_size=1))
    extra = data.draw(st.frozensets(st.integers(0, g.n - 1)))
    c_small = set(geodetic_closure(g, dm, small))
    c_big = set(geodetic_closure(g, dm, small | extra))
    assert small <= c_small
    assert c_small <= c_big


def test_geodetic_families():
    p5 = path_graph(5)
    dm = all_pairs(p5)
    assert is_geodetic(p5, dm, [0, 4])
    assert not is_geodetic(p5, dm, [0])
    k4 = complete_graph(4)
    dmk = all_pairs(k4)
    # complete graph: intervals are just the endpoint pairs
    assert not is_geodetic(k4, dmk, [0, 1, 2])
    assert is_geodetic(k4, dmk, range(4))


# ---------------------------------------------------------------------------
# simplicial vertices


def test_simplicial_families():
    assert list(simplicial_vertices(path_graph(5))) == [0, 4]
    assert list(simplicial_vertices(cycle_graph(5))) == []
    assert list(simplicial_vertices(complete_graph(4))) == [0, 1, 2, 3]
    star = star_graph(["hub", "l1", "l2", "l3"])
    assert star.labels_of(simplicial_vertices(star)) == ["l1", "l2", "l3"]


def test_simplicial_triangle_counts_all():
    assert len(simplicial_vertices(cycle_graph(3))) == 3


# ---------------------------------------------------------------------------
# families


def test_family_sizes():
    assert (path_graph(5).n, path_graph(5).edge_count) == (5, 4)
    assert (cycle_graph(5).n, cycle_graph(5).edge_count) == (5, 5)
    assert (complete_graph(5).n, complete_graph(5).edge_count) == (5, 10)
    assert (star_graph(5).n, star_graph(5).edge_count) == (5, 4)


def test_generated_labels_sort_naturally():
    g = path_graph(12)
    assert g.labels[0] == "v00" and g.labels[11] == "v11"
    assert all_pairs(g).dist(0, 11) == 11


def test_star_center_is_first_label():
    g = star_graph(["mid", "a", "b"])
    assert g.degree(g.index_of("mid")) == 2


@pytest.mark.parametrize(
    "family, arg",
    [(path_graph, 0), (cycle_graph, 2), (star_graph, 1), (complete_graph, [])],
)
def test_family_argument_validation(family, arg):
    with pytest.raises(ValueError):
        family(arg)
