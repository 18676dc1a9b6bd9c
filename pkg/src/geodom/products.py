"""Cartesian, lexicographic, and strong graph products.

Product vertices are labeled "(g,h)" with the factor order fixed as the
argument order; nothing is commuted or canonicalized. Each kind has a
closed-form distance, but boundary reports always recompute distances by
BFS on the constructed product, so the closed forms are cross-checks and
never the source of truth.

The boundary reports compare the actual boundary of a base vertex
(g, h) against candidate bounds built from the factor boundaries:

- cartesian: lower and upper both equal the set product of the factor
  boundaries, and the actual boundary matches them;
- lexicographic: lower is the base layer's copy of the second factor's
  boundary (always contained), upper adds whole layers over the first
  factor's boundary;
- strong: lower is the set product of the factor boundaries, upper is
  the union of whole rows/columns over each factor's boundary, and both
  containments hold.

The lexicographic upper candidate is not an upper bound in general: the
truncated layer metric min(d_H, 2) makes every layer vertex at distance
two or more from the base a boundary vertex, whether or not its second
coordinate lies in the factor boundary. Reports record such violations
in containments_hold and witnesses instead of assuming the bound. The
gx reports treat the corresponding numeric bounds the same way: the
cartesian product equality and the strong interval always hold, the
lexicographic interval's lower end always holds, and its upper end can
fail, which ProductGxReport.holds records.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .boundary import boundary
from .graph import (
    DisconnectedError,
    DistanceMatrix,
    Graph,
    VertexSet,
    all_pairs,
    is_connected,
)

__all__ = [
    "ProductKind",
    "ProductGraph",
    "ProductBoundaryReport",
    "ProductGxReport",
    "product",
    "product_distance",
    "product_boundary_report",
    "product_boundary_reports",
    "product_gx_report",
    "product_gx_reports",
]


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    LEXICOGRAPHIC = "lexicographic"
    STRONG = "strong"


def _as_kind(kind: "ProductKind | str") -> ProductKind:
    if isinstance(kind, ProductKind):
        return kind
    try:
        return ProductKind(kind)
    except ValueError:
        names = ", ".join(k.value for k in ProductKind)
        raise ValueError(f"unknown product kind {kind!r} (expected one of: {names})") from None


@dataclass(frozen=True, eq=False)
class ProductGraph:
    """A constructed product together with its factor bookkeeping.

    factor_pairs[p] is the (g_index, h_index) pair behind product vertex p.
    """

    kind: ProductKind
    factor_g: Graph
    factor_h: Graph
    graph: Graph
    factor_pairs: tuple[tuple[int, int], ...]

    def index_of_pair(self, gi: int, hi: int) -> int:
        if not 0 <= gi < self.factor_g.n:
            raise ValueError(f"first-factor index {gi} out of range")
        if not 0 <= hi < self.factor_h.n:
            raise ValueError(f"second-factor index {hi} out of range")
        return self.graph.index_of(pair_label(self.factor_g.labels[gi], self.factor_h.labels[hi]))

    def pair_of(self, p: int) -> tuple[int, int]:
        return self.factor_pairs[p]


def pair_label(g_label: str, h_label: str) -> str:
    return f"({g_label},{h_label})"


def product(kind: "ProductKind | str", g: Graph, h: Graph) -> ProductGraph:
    """Construct the product of two connected graphs under the given kind.

    Edge rules on pairs (g, h), (g', h'):
      cartesian      gg' in E(G) and h = h', or g = g' and hh' in E(H)
      lexicographic  gg' in E(G), or g = g' and hh' in E(H)
      strong         cartesian rule, or gg' in E(G) and hh' in E(H)
    """
    kind = _as_kind(kind)
    if not is_connected(g) or not is_connected(h):
        raise DisconnectedError("disconnected factor")
    # a comma inside a factor label would make distinct pair labels collide
    for lab in (*g.labels, *h.labels):
        if "," in lab:
            raise ValueError(f"factor label {lab!r} contains a comma")

    gl, hl = g.labels, h.labels
    vertices = [pair_label(a, b) for a in gl for b in hl]
    edges: list[tuple[str, str]] = []

    # copies of H inside each layer: all kinds share these edges
    for a in gl:
        for hu, hv in h.edges():
            edges.append((pair_label(a, hl[hu]), pair_label(a, hl[hv])))

    for gu, gv in g.edges():
        a, b = gl[gu], gl[gv]
        if kind is ProductKind.LEXICOGRAPHIC:
            for hu in hl:
                for hv in hl:
                    edges.append((pair_label(a, hu), pair_label(b, hv)))
        else:
            for c in hl:
                edges.append((pair_label(a, c), pair_label(b, c)))
            if kind is ProductKind.STRONG:
                for hu, hv in h.edges():
                    edges.append((pair_label(a, hl[hu]), pair_label(b, hl[hv])))
                    edges.append((pair_label(a, hl[hv]), pair_label(b, hl[hu])))

    pg = Graph(edges, vertices=vertices)
    if pg.n != g.n * h.n:
        raise AssertionError("pair labels collided; factor labels are unusable")
    pairs = [(0, 0)] * pg.n
    for gi in range(g.n):
        for hi in range(h.n):
            pairs[pg.index_of(pair_label(gl[gi], hl[hi]))] = (gi, hi)
    return ProductGraph(
        kind=kind, factor_g=g, factor_h=h, graph=pg, factor_pairs=tuple(pairs)
    )


def product_distance(
    kind: "ProductKind | str",
    dmg: DistanceMatrix,
    dmh: DistanceMatrix,
    pair_a: tuple[int, int],
    pair_b: tuple[int, int],
) -> int:
    """Closed-form product distance between two (g, h) index pairs."""
    kind = _as_kind(kind)
    gi, hi = pair_a
    gj, hj = pair_b
    for idx, bound in ((gi, dmg.n), (gj, dmg.n), (hi, dmh.n), (hj, dmh.n)):
        if not 0 <= idx < bound:
            raise ValueError(f"vertex index {idx} out of range")
    dg = dmg.dist(gi, gj)
    dh = dmh.dist(hi, hj)
    if kind is ProductKind.CARTESIAN:
        return dg + dh
    if kind is ProductKind.STRONG:
        return max(dg, dh)
    if gi != gj:
        return dg
    # same layer: hop out to a neighbor layer and back, unless G is trivial
    return dh if dmg.n == 1 else min(dh, 2)


@dataclass(frozen=True)
class ProductBoundaryReport:
    """Boundary of one base vertex in a product, against its factor bounds.

    witnesses lists the vertices violating a containment (None when all
    containments hold); upper_strict records whether the actual boundary
    is a proper subset of the upper bound.
    """

    kind: ProductKind
    base: tuple[int, int]
    product: ProductGraph
    actual_boundary: VertexSet
    lower_bound: VertexSet
    upper_bound: VertexSet
    containments_hold: bool
    witnesses: VertexSet | None
    upper_strict: bool


@dataclass(frozen=True)
class ProductGxReport:
    """Geodomination number of one base vertex in a product, against the
    bounds induced by the factor values."""

    kind: ProductKind
    base: tuple[int, int]
    gx_product: int
    gx_g: int
    gx_h: int
    lower: int
    upper: int
    holds: bool


def _require_metric_factors(g: Graph, h: Graph) -> None:
    if g.n < 2 or h.n < 2:
        raise ValueError("boundary reports need factors with at least two vertices")


def _bound_pair_sets(
    kind: ProductKind,
    pg: ProductGraph,
    base: tuple[int, int],
    bg: VertexSet,
    bh: VertexSet,
) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
    base_g, base_h = base
    ng, nh = pg.factor_g.n, pg.factor_h.n
    if kind is ProductKind.CARTESIAN:
        lower = {(a, b) for a in bg for b in bh}
        return lower, set(lower)
    if kind is ProductKind.LEXICOGRAPHIC:
        lower = {(base_g, b) for b in bh}
        upper = {(a, b) for a in bg for b in range(nh)} | lower
        return lower, upper
    lower = {(a, b) for a in bg for b in bh}
    upper = {(a, b) for a in bg for b in range(nh)} | {
        (a, b) for a in range(ng) for b in bh
    }
    return lower, upper


def _boundary_report_at(
    pg: ProductGraph,
    dmp: DistanceMatrix,
    base: tuple[int, int],
    bg: VertexSet,
    bh: VertexSet,
) -> ProductBoundaryReport:
    n = pg.graph.n
    base_index = pg.index_of_pair(*base)
    actual = boundary(pg.graph, dmp, base_index).boundary
    lower_pairs, upper_pairs = _bound_pair_sets(pg.kind, pg, base, bg, bh)
    lower = VertexSet.of((pg.index_of_pair(a, b) for a, b in lower_pairs), n)
    upper = VertexSet.of((pg.index_of_pair(a, b) for a, b in upper_pairs), n)

    actual_set = set(actual)
    bad = sorted((set(lower) - actual_set) | (actual_set - set(upper)))
    holds = not bad
    return ProductBoundaryReport(
        kind=pg.kind,
        base=base,
        product=pg,
        actual_boundary=actual,
        lower_bound=lower,
        upper_bound=upper,
        containments_hold=holds,
        witnesses=None if holds else VertexSet.of(bad, n),
        upper_strict=holds and len(actual) < len(upper),
    )


def product_boundary_report(
    kind: "ProductKind | str", g: Graph, h: Graph, base_g: int, base_h: int
) -> ProductBoundaryReport:
    """Boundary of the base vertex in the product, with factor-derived
    lower/upper bounds and exact containment checks."""
    _require_metric_factors(g, h)
    pg = product(kind, g, h)
    dmp = all_pairs(pg.graph)
    bg = boundary(g, all_pairs(g), base_g).boundary
    bh = boundary(h, all_pairs(h), base_h).boundary
    return _boundary_report_at(pg, dmp, (base_g, base_h), bg, bh)


def product_boundary_reports(
    kind: "ProductKind | str", g: Graph, h: Graph
) -> tuple[ProductBoundaryReport, ...]:
    """Boundary reports for every base vertex, sharing one product build."""
    _require_metric_factors(g, h)
    pg = product(kind, g, h)
    dmp = all_pairs(pg.graph)
    dmg, dmh = all_pairs(g), all_pairs(h)
    bgs = [boundary(g, dmg, x).boundary for x in range(g.n)]
    bhs = [boundary(h, dmh, y).boundary for y in range(h.n)]
    return tuple(
        _boundary_report_at(pg, dmp, (x, y), bgs[x], bhs[y])
        for x in range(g.n)
        for y in range(h.n)
    )


def _gx_report_at(
    pg: ProductGraph,
    dmp: DistanceMatrix,
    base: tuple[int, int],
    gx_g: int,
    gx_h: int,
) -> ProductGxReport:
    base_index = pg.index_of_pair(*base)
    gxp = boundary(pg.graph, dmp, base_index).gx
    ng, nh = pg.factor_g.n, pg.factor_h.n
    if pg.kind is ProductKind.CARTESIAN:
        lower = upper = gx_g * gx_h
    elif pg.kind is ProductKind.LEXICOGRAPHIC:
        lower, upper = gx_h, gx_g * nh + gx_h
    else:
        lower, upper = gx_g * gx_h, gx_g * nh + ng * gx_h
    return ProductGxReport(
        kind=pg.kind,
        base=base,
        gx_product=gxp,
        gx_g=gx_g,
        gx_h=gx_h,
        lower=lower,
        upper=upper,
        holds=lower <= gxp <= upper,
    )


def product_gx_report(
    kind: "ProductKind | str", g: Graph, h: Graph, base_g: int, base_h: int
) -> ProductGxReport:
    """Geodomination number of the base vertex in the product, checked
    against the bounds induced by the factor values."""
    _require_metric_factors(g, h)
    pg = product(kind, g, h)
    dmp = all_pairs(pg.graph)
    gx_g = boundary(g, all_pairs(g), base_g).gx
    gx_h = boundary(h, all_pairs(h), base_h).gx
    return _gx_report_at(pg, dmp, (base_g, base_h), gx_g, gx_h)


def product_gx_reports(
    kind: "ProductKind | str", g: Graph, h: Graph
) -> tuple[ProductGxReport, ...]:
    """Gx reports for every base vertex, sharing one product build."""
    _require_metric_factors(g, h)
    pg = product(kind, g, h)
    dmp = all_pairs(pg.graph)
    dmg, dmh = all_pairs(g), all_pairs(h)
    gx_gs = [boundary(g, dmg, x).gx for x in range(g.n)]
    gx_hs = [boundary(h, dmh, y).gx for y in range(h.n)]
    return tuple(
        _gx_report_at(pg, dmp, (x, y), gx_gs[x], gx_hs[y])
        for x in range(g.n)
        for y in range(h.n)
    )
