"""Time all-source boundary computation on seeded random sparse graphs.

Builds one connected graph per requested size (a uniform spanning tree
plus extra edges at probability edge_factor / n, so the average degree
stays flat as n grows), then times the distance matrix plus the boundary
of every source. Prints one row per size and the fitted log-log growth
exponent at the end.
"""

import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from geodom import GraphGenSpec, all_pairs, boundary, random_connected_graph


@dataclass
class TimingConfig:
    sizes: list[int] = field(default_factory=lambda: [500, 1000, 2000])
    edge_factor: float = 3.0
    seed: int = 42
    repeats: int = 1


def time_all_sources(config: TimingConfig) -> list[tuple[int, int, float]]:
    rows = []
    for n in config.sizes:
        spec = GraphGenSpec(
            n=n,
            mode="random",
            edge_probability=config.edge_factor / n,
            seed=config.seed,
        )
        g = random_connected_graph(spec)
        best = float("inf")
        for _ in range(config.repeats):
            t0 = time.perf_counter()
            dm = all_pairs(g)
            for x in range(g.n):
                boundary(g, dm, x)
            best = min(best, time.perf_counter() - t0)
        rows.append((n, g.edge_count, best))
    return rows


def fitted_exponent(rows: list[tuple[int, int, float]]) -> float:
    ns = np.log(np.array([r[0] for r in rows], dtype=float))
    ts = np.log(np.array([r[2] for r in rows], dtype=float))
    return float(np.polyfit(ns, ts, 1)[0])


def main(argv: "list[str] | None" = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        type=int,
        nargs="+",
        default=[500, 1000, 2000],
        help="graph sizes to time (default: 500 1000 2000)",
    )
    parser.add_argument(
        "--edge-factor",
        type=float,
        default=3.0,
        help="extra-edge probability is this value divided by n",
    )
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument(
        "--repeats", type=int, default=1, help="keep the best of this many runs"
    )
    args = parser.parse_args(argv)

    config = TimingConfig(
        sizes=args.sizes,
        edge_factor=args.edge_factor,
        seed=args.seed,
        repeats=args.repeats,
    )
    rows = time_all_sources(config)
    print(f"{'n':>8} {'edges':>8} {'seconds':>10}")
    for n, m, secs in rows:
        print(f"{n:>8} {m:>8} {secs:>10.3f}")
    if len(rows) >= 2:
        print(f"fitted growth exponent: {fitted_exponent(rows):.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
