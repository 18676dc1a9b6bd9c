"""Boundary vertices, x-geodomination, and geodetic sets on connected
graphs, with product constructions and brute-force verification oracles."""

from .boundary import (
    BoundaryResult,
    GeodominationCheck,
    boundary,
    geodetic_from_boundary,
    gx,
    gx_set,
    is_x_geodominating,
    min_gx_vertex,
    theorem_check,
)
from .graph import (
    DisconnectedError,
    DistanceMatrix,
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
from .oracles import (
    GraphGenSpec,
    OracleResult,
    VerificationReport,
    enumerate_connected_graphs,
    find_simplicial_counterexample,
    geodetic_number_bruteforce,
    min_x_geodominating_bruteforce,
    random_connected_graph,
    random_graph_corpus,
    verify_unique_minimum,
)
from .products import (
    ProductBoundaryReport,
    ProductGraph,
    ProductGxReport,
    ProductKind,
    product,
    product_boundary_report,
    product_boundary_reports,
    product_distance,
    product_gx_report,
    product_gx_reports,
)

__version__ = "0.1.0"

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
    "BoundaryResult",
    "GeodominationCheck",
    "boundary",
    "is_x_geodominating",
    "gx",
    "gx_set",
    "theorem_check",
    "min_gx_vertex",
    "geodetic_from_boundary",
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
    "OracleResult",
    "GraphGenSpec",
    "VerificationReport",
    "min_x_geodominating_bruteforce",
    "geodetic_number_bruteforce",
    "enumerate_connected_graphs",
    "random_connected_graph",
    "random_graph_corpus",
    "find_simplicial_counterexample",
    "verify_unique_minimum",
    "__version__",
]
