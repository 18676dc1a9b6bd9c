"""Core graph representation and metric primitives.

Vertices are arbitrary non-whitespace string labels. Internal indices are
the labels' positions in sorted order, so every derived quantity is
deterministic across runs. Graphs are simple, undirected, and immutable
after construction; all metric operations (distances, intervals, closures)
require a connected graph and raise :class:`DisconnectedError` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "DistanceMatrix",
    "VertexSet",
    "GraphError",
    "ParseError",
    "DisconnectedError",
    "parse_graph",
    "emit_graph",
    "is_connected",
    "bfs_distances",
    "all_pairs",
    "interval",
    "geodetic_closure",
    "is_geodetic",
    "simplicial_vertices",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
]


class GraphError(Exception):
    """Invalid graph construction or a graph-level precondition failure."""


class ParseError(GraphError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DisconnectedError(GraphError):
    """A metric operation received a disconnected graph."""


def _valid_label(label: str) -> bool:
    return isinstance(label, str) and bool(label) and label.split() == [label]


class Graph:
    """Immutable simple undirected graph over string-labeled vertices.

    ``labels`` is the sorted tuple of vertex labels; vertex ``i`` is
    ``labels[i]``. ``adj[i]`` is the sorted tuple of neighbor indices.
    ``flat_neighbors`` / ``neighbor_offsets`` hold the same adjacency in
    CSR form for vectorized scans.
    """

    __slots__ = (
        "labels",
        "adj",
        "edge_count",
        "flat_neighbors",
        "neighbor_offsets",
        "_index",
        "_adj_sets",
    )

    def __init__(
        self,
        edges: Iterable[tuple[str, str]] = (),
        vertices: Iterable[str] = (),
    ):
        label_set: set[str] = set()
        for label in vertices:
            if not _valid_label(label):
                raise GraphError(f"invalid vertex label {label!r}")
            label_set.add(label)
        pairs: list[tuple[str, str]] = []
        for u, v in edges:
            if not _valid_label(u) or not _valid_label(v):
                raise GraphError(f"invalid vertex label in edge ({u!r}, {v!r})")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            label_set.add(u)
            label_set.add(v)
            pairs.append((u, v))
        if not label_set:
            raise GraphError("empty vertex set")

        self.labels: tuple[str, ...] = tuple(sorted(label_set))
        self._index: dict[str, int] = {lab: i for i, lab in enumerate(self.labels)}
        neighbor_sets: list[set[int]] = [set() for _ in self.labels]
        for u, v in pairs:
            iu, iv = self._index[u], self._index[v]
            neighbor_sets[iu].add(iv)
            neighbor_sets[iv].add(iu)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        self._adj_sets: tuple[frozenset[int], ...] = tuple(
            frozenset(s) for s in neighbor_sets
        )
        self.edge_count: int = sum(len(a) for a in self.adj) // 2

        degrees = [len(a) for a in self.adj]
        self.flat_neighbors: np.ndarray = np.fromiter(
            (w for a in self.adj for w in a), dtype=np.intp, count=2 * self.edge_count
        )
        offsets = np.zeros(len(self.labels), dtype=np.intp)
        np.cumsum(degrees[:-1], out=offsets[1:])
        offsets.setflags(write=False)
        self.flat_neighbors.setflags(write=False)
        self.neighbor_offsets: np.ndarray = offsets

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown vertex label {label!r}") from None

    def label(self, v: int) -> str:
        return self.labels[v]

    def labels_of(self, vertices: Iterable[int]) -> list[str]:
        """Labels of the given indices; ascending indices give sorted labels."""
        return [self.labels[v] for v in vertices]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as an index pair (u, v) with u < v, sorted."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances as a read-only (n, n) integer matrix."""

    d: np.ndarray

    @property
    def n(self) -> int:
        return int(self.d.shape[0])

    def dist(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def row(self, u: int) -> np.ndarray:
        return self.d[u]


@dataclass(frozen=True)
class VertexSet:
    """Sorted, deduplicated vertex indices within a host graph of size n."""

    members: tuple[int, ...]
    n: int

    def __post_init__(self):
        prev = -1
        for m in self.members:
            if not isinstance(m, int) or not prev < m < self.n:
                raise ValueError(
                    f"vertex set members must be strictly ascending indices in "
                    f"[0, {self.n}), got {self.members!r}"
                )
            prev = m

    @classmethod
    def of(cls, items: Iterable[int], n: int) -> "VertexSet":
        return cls(tuple(sorted({int(i) for i in items})), n)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __bool__(self) -> bool:
        return bool(self.members)

    def issubset(self, other: Iterable[int]) -> bool:
        return set(self.members) <= {int(i) for i in other}


def _as_vertex_set(s: "VertexSet | Iterable[int]", n: int) -> VertexSet:
    if isinstance(s, VertexSet):
        if s.n != n:
            raise ValueError(f"vertex set is for a graph of size {s.n}, not {n}")
        return s
    return VertexSet.of(s, n)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex index {v} out of range [0, {g.n})")


def _check_matrix(g: Graph, dm: DistanceMatrix) -> None:
    if dm.n != g.n:
        raise ValueError(
            f"distance matrix has size {dm.n}, graph has {g.n} vertices"
        )


# ---------------------------------------------------------------------------
# parsing / emission


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document into a Graph.

    Lines are comments (``#`` prefix), an optional ``vertices: a b c ...``
    declaration, or ``u v`` edge lines. Duplicate edges collapse; self-loops
    and malformed lines raise :class:`ParseError` with the line number.
    """
    declared: list[str] = []
    edges: list[tuple[str, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            declared.extend(line[len("vertices:"):].split())
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected an edge line 'u v', got {raw!r}", line_no)
        u, v = parts
        if u == v:
            raise ParseError(f"self-loop at {u!r}", line_no)
        edges.append((u, v))
    if not declared and not edges:
        raise ParseError("empty vertex set: no edges or vertex declarations")
    return Graph(edges, vertices=declared)


def emit_graph(g: Graph) -> str:
    """Edge-list document that re-parses to an equal Graph."""
    lines = ["vertices: " + " ".join(g.labels)]
    for u, v in g.edges():
        lines.append(f"{g.labels[u]} {g.labels[v]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# distances


def _bfs_row(adj: Sequence[Sequence[int]], source: int) -> list[int]:
    """Hop counts from source; -1 marks unreachable vertices."""
    dist = [-1] * len(adj)
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    return -1 not in _bfs_row(g.adj, 0)


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Distance row from source as a read-only integer array."""
    _check_vertex(g, source)
    row = _bfs_row(g.adj, source)
    if -1 in row:
        raise DisconnectedError("graph is disconnected")
    out = np.array(row, dtype=np.int32)
    out.setflags(write=False)
    return out


def all_pairs(g: Graph) -> DistanceMatrix:
    """All-pairs distances via one BFS per vertex."""
    if not is_connected(g):
        raise DisconnectedError("graph is disconnected")
    n = g.n
    d = np.empty((n, n), dtype=np.int32)
    for src in range(n):
        d[src] = _bfs_row(g.adj, src)
    d.setflags(write=False)
    return DistanceMatrix(d)


# ---------------------------------------------------------------------------
# intervals and geodetic closure


def interval(g: Graph, dm: DistanceMatrix, u: int, v: int) -> VertexSet:
    """Vertices on at least one shortest u-v path:
    { w : d(u,w) + d(w,v) = d(u,v) }."""
    _check_matrix(g, dm)
    _check_vertex(g, u)
    _check_vertex(g, v)
    row_u = dm.row(u)
    members = np.flatnonzero(row_u + dm.row(v) == row_u[v])
    return VertexSet.of(members, g.n)


def geodetic_closure(g: Graph, dm: DistanceMatrix, s: "VertexSet | Iterable[int]") -> VertexSet:
    """Union of intervals over all pairs of vertices in s."""
    _check_matrix(g, dm)
    vs = _as_vertex_set(s, g.n)
    if not vs:
        raise ValueError("geodetic closure of the empty set is undefined")
    members = list(vs)
    mask = np.zeros(g.n, dtype=bool)
    mask[members] = True
    for i, u in enumerate(members):
        row_u = dm.row(u)
        for v in members[i + 1:]:
            mask |= row_u + dm.row(v) == row_u[v]
    return VertexSet.of(np.flatnonzero(mask), g.n)


def is_geodetic(g: Graph, dm: DistanceMatrix, s: "VertexSet | Iterable[int]") -> bool:
    """True iff the geodetic closure of s covers every vertex."""
    return len(geodetic_closure(g, dm, s)) == g.n


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose neighborhood induces a clique."""
    out = []
    for v in range(g.n):
        nbrs = g.adj[v]
        if all(
            nbrs[j] in g._adj_sets[nbrs[i]]
            for i in range(len(nbrs))
            for j in range(i + 1, len(nbrs))
        ):
            out.append(v)
    return VertexSet.of(out, g.n)


# ---------------------------------------------------------------------------
# standard families (test and demo substrate)


def _family_labels(vertices: "int | Sequence[str]") -> list[str]:
    if isinstance(vertices, int):
        n = vertices
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        width = len(str(n - 1))
        return [f"v{i:0{width}d}" for i in range(n)]
    labels = list(vertices)
    if not labels:
        raise ValueError("a graph needs at least one vertex")
    return labels


def path_graph(vertices: "int | Sequence[str]") -> Graph:
    """Path through the given labels in order (generated labels if an int)."""
    labels = _family_labels(vertices)
    return Graph(zip(labels, labels[1:]), vertices=labels)


def cycle_graph(vertices: "int | Sequence[str]") -> Graph:
    labels = _family_labels(vertices)
    if len(labels) < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(list(zip(labels, labels[1:])) + [(labels[-1], labels[0])])


def complete_graph(vertices: "int | Sequence[str]") -> Graph:
    labels = _family_labels(vertices)
    edges = [
        (labels[i], labels[j])
        for i in range(len(labels))
        for j in range(i + 1, len(labels))
    ]
    return Graph(edges, vertices=labels)


def star_graph(vertices: "int | Sequence[str]") -> Graph:
    """First label is the center, the rest are leaves."""
    labels = _family_labels(vertices)
    if len(labels) < 2:
        raise ValueError("a star needs a center and at least one leaf")
    return Graph((labels[0], leaf) for leaf in labels[1:])
