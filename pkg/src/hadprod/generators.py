"""Named graph families."""

from __future__ import annotations

import random

from .graph import Graph
from .product import cartesian_power, cartesian_product


def complete(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    """K_{1,n}: centre 0, leaves 1..n."""
    return Graph(n + 1, ((0, i) for i in range(1, n + 1)))


def grid(n: int) -> Graph:
    """n x n grid; cell (r, c) is vertex r*n + c."""
    return cartesian_product(path(n), path(n))[0]


def double_grid(n: int) -> Graph:
    """Two n x n grids joined at equal labels.  Cell (r, c) of copy k is 2*(r*n + c) + k,
    which is exactly the labelling of ``grid(n) □ K_2``."""
    return cartesian_product(grid(n), complete(2))[0]


def hypercube(d: int) -> Graph:
    return cartesian_power(complete(2), d)[0]


def fan(n: int) -> Graph:
    """W_n: vertex 0 universal, 1..n-1 a path."""
    return Graph(n, ((i, j) for j in range(1, n) for i in range(j) if i == 0 or j == i + 1))


FAMILIES = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "star": star,
    "grid": grid,
    "double-grid": double_grid,
    "hypercube": hypercube,
    "fan": fan,
}


def generate(kind: str, params) -> Graph:
    params = list(params)
    try:
        build = FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown graph family {kind!r}") from None
    if len(params) != 1:
        raise ValueError(f"{kind} takes exactly one parameter")
    if params[0] < 1:
        raise ValueError(f"{kind} parameter must be positive")
    return build(params[0])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) overlaid on a uniformly random recursive spanning tree."""
    order = list(range(n))
    rng.shuffle(order)
    es = set()
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        es.add((min(u, v), max(u, v)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                es.add((i, j))
    return Graph(n, es)
