"""Exact Hadwiger numbers of small products next to their formula bounds.

    python3 scripts/small_products.py [--max-n 7] [--budget 200000]

A row ending in ">=" ran out of search budget and shows a certified lower bound.
"""

import argparse
import time

import networkx as nx

from hadprod.construction import upper_bound_kn_km
from hadprod.generators import complete, cycle
from hadprod.graph import Graph
from hadprod.product import cartesian_product
from hadprod.search import edge_count_bound, hadwiger_exact


def prod(a, b):
    return cartesian_product(a, b)[0]


def row(name, g, budget, bound=None):
    t0 = time.perf_counter()
    res = hadwiger_exact(g, budget)
    ms = (time.perf_counter() - t0) * 1000
    extra = f"  formula <= {bound}" if bound is not None else ""
    eta = f"{res.value}" if res.exact else f"{res.value}>="
    print(f"{name:<14} n={g.n:<3} eta={eta:<4} edge bound={edge_count_bound(g):<3}{extra}  {ms:8.1f} ms")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--budget", type=int, default=200000, help="search nodes per graph")
    a = ap.parse_args()
    for n in range(3, a.max_n + 1):
        row(f"C{n} x K2", prod(cycle(n), complete(2)), a.budget)
    for size in range(2, 6):
        for k, t in enumerate(nx.nonisomorphic_trees(size)):
            tree = Graph(size, t.edges)
            for n in (2, 3, 4):
                row(f"T{size}.{k} x K{n}", prod(tree, complete(n)), a.budget)
    for n in range(2, 6):
        for m in range(2, n + 1):
            row(f"K{n} x K{m}", prod(complete(n), complete(m)), a.budget, upper_bound_kn_km(n, m))


if __name__ == "__main__":
    main()
