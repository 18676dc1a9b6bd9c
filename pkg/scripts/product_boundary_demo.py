"""Walk through boundary reports on small path products.

Shows the three product kinds on P3 x P3 (and P3 x P4 for the strong
kind), printing the actual boundary of a chosen base vertex next to the
factor-derived candidate bounds. The last section demonstrates that the
lexicographic upper candidate is not a bound in general: on P2 lex a
four-vertex tree, a layer vertex at truncated distance two from the base
is a boundary vertex that the candidate misses.
"""

import argparse
from dataclasses import dataclass

from geodom import Graph, path_graph
from geodom.products import ProductBoundaryReport, product_boundary_report


@dataclass
class DemoConfig:
    base_g: str = "a"
    base_h: str = "1"


def show(rep: ProductBoundaryReport, title: str) -> None:
    pg = rep.product
    labels = lambda vs: " ".join(sorted(pg.graph.labels[p] for p in vs))
    print(title)
    print(f"  actual boundary : {labels(rep.actual_boundary)}")
    print(f"  lower candidate : {labels(rep.lower_bound)}")
    print(f"  upper candidate : {labels(rep.upper_bound)}")
    print(f"  containments    : {'hold' if rep.containments_hold else 'VIOLATED'}")
    if rep.witnesses is not None:
        print(f"  witnesses       : {labels(rep.witnesses)}")
    print()


def main(argv: "list[str] | None" = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--base-g", default="a", help="first-factor base label")
    parser.add_argument("--base-h", default="1", help="second-factor base label")
    args = parser.parse_args(argv)
    config = DemoConfig(base_g=args.base_g, base_h=args.base_h)

    p3a = path_graph(["a", "b", "c"])
    p3n = path_graph(["1", "2", "3"])
    p4n = path_graph(["1", "2", "3", "4"])
    bg = p3a.index_of(config.base_g)
    bh = p3n.index_of(config.base_h)

    for kind in ("cartesian", "lexicographic", "strong"):
        rep = product_boundary_report(kind, p3a, p3n, bg, bh)
        show(rep, f"{kind}: P3 x P3, base ({config.base_g},{config.base_h})")

    rep = product_boundary_report("strong", p3a, p4n, bg, p4n.index_of("1"))
    show(rep, f"strong: P3 x P4, base ({config.base_g},1)")

    p2 = path_graph(["A", "B"])
    tree = Graph([("a", "b"), ("a", "c"), ("b", "d")])
    rep = product_boundary_report(
        "lexicographic", p2, tree, p2.index_of("A"), tree.index_of("c")
    )
    show(rep, "lexicographic: P2 x tree(a-b, a-c, b-d), base (A,c)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
