"""Cartesian products, powers and unique prime factorization.

Product vertices are flattened mixed-radix with the first factor most
significant, so ``<i, j>`` in ``G □ H`` is vertex ``i * |H| + j``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import prod

from .graph import Graph, component_masks, members, parse_graph6, write_graph6


@dataclass(frozen=True)
class ProductLabeling:
    sizes: tuple[int, ...]

    def __post_init__(self):
        if any(s < 1 for s in self.sizes):
            raise ValueError("factor sizes must be positive")

    @property
    def order(self) -> int:
        return prod(self.sizes)

    def encode(self, coords) -> int:
        if len(coords) != len(self.sizes):
            raise ValueError("coordinate tuple has the wrong length")
        flat = 0
        for c, s in zip(coords, self.sizes):
            if not 0 <= c < s:
                raise ValueError(f"coordinate {c} out of range for factor of size {s}")
            flat = flat * s + c
        return flat

    def decode(self, flat: int) -> tuple[int, ...]:
        if not 0 <= flat < self.order:
            raise ValueError(f"flat index {flat} out of range")
        out = []
        for s in reversed(self.sizes):
            flat, c = divmod(flat, s)
            out.append(c)
        return tuple(reversed(out))


def cartesian_product(g: Graph, h: Graph) -> tuple[Graph, ProductLabeling]:
    if g.n == 0 or h.n == 0:
        raise ValueError("factors must be nonempty")
    n2 = h.n
    # spread[i]: neighbors of i in g, placed at the coordinate-0 column of each block
    spread = []
    for a in g.adj:
        s = 0
        for i2 in members(a):
            s |= 1 << (i2 * n2)
        spread.append(s)
    adj = []
    for i in range(g.n):
        base = i * n2
        si = spread[i]
        for j, b in enumerate(h.adj):
            adj.append((si << j) | (b << base))
    return Graph.from_adjacency(adj, check=False), ProductLabeling((g.n, n2))


def cartesian_power(g: Graph, d: int) -> tuple[Graph, ProductLabeling]:
    if d < 1:
        raise ValueError("power must be at least 1")
    if g.n == 0:
        raise ValueError("factor must be nonempty")
    out = g
    for _ in range(d - 1):
        out, _ = cartesian_product(out, g)
    return out, ProductLabeling((g.n,) * d)


def product_of(factors) -> tuple[Graph, ProductLabeling]:
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    out = factors[0]
    for f in factors[1:]:
        out, _ = cartesian_product(out, f)
    return out, ProductLabeling(tuple(f.n for f in factors))


# -- canonical forms ---------------------------------------------------------

def _refine(adj, cells):
    """Equitable refinement of an ordered partition (list of lists)."""
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        new = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in members(adj[v]):
                    counts[where[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            for key in sorted(sig):
                new.append(sig[key])
        if len(new) == len(cells):
            return new
        cells = new


def canonical_form(g: Graph, max_leaves: int = 20000) -> tuple[Graph, list[int]]:
    """Canonically relabelled copy of ``g`` and the permutation used (old -> new).

    Individualization-refinement picking the lexicographically smallest sorted
    edge list.  Exact for graphs whose search tree has at most ``max_leaves``
    leaves; beyond that the best labelling seen so far is returned.
    """
    if g.n == 0:
        return g, []
    adj = g.adj
    start = _refine(adj, [sorted(range(g.n), key=lambda v: (g.degree(v), v))])
    best = None
    best_perm = None
    leaves = 0

    def search(cells):
        nonlocal best, best_perm, leaves
        if leaves >= max_leaves:
            return
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            leaves += 1
            perm = [0] * g.n
            for pos, cell in enumerate(cells):
                perm[cell[0]] = pos
            cert = sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges)
            if best is None or cert < best:
                best, best_perm = cert, perm
            return
        idx = cells.index(target)
        for v in target:
            rest = [w for w in target if w != v]
            search(_refine(adj, cells[:idx] + [[v], rest] + cells[idx + 1:]))

    search(start)
    return Graph(g.n, best), best_perm


def canonical_key(g: Graph) -> tuple:
    c, _ = canonical_form(g)
    return (c.n, c.m, tuple(c.edge_list()))


# -- factorization -----------------------------------------------------------

@dataclass(frozen=True)
class FactorizationResult:
    factors: tuple[Graph, ...]
    coordinates: tuple[tuple[int, ...], ...]

    @property
    def labeling(self) -> ProductLabeling:
        return ProductLabeling(tuple(f.n for f in self.factors))

    def to_json(self) -> dict:
        return {
            "factors": [write_graph6(f).decode() for f in self.factors],
            "coordinates": [list(c) for c in self.coordinates],
        }

    @classmethod
    def from_json(cls, doc) -> "FactorizationResult":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(tuple(parse_graph6(f) for f in doc["factors"]),
                   tuple(tuple(c) for c in doc["coordinates"]))


class FactorizationError(RuntimeError):
    """The computed factorization failed its re-multiplication certificate."""


def _edge_classes(g: Graph) -> list[list[tuple[int, int]]]:
    """Transitive closure of the square relation on edges.

    Opposite edges of an induced 4-cycle are related; two edges sharing a vertex
    are related when no induced 4-cycle contains both.
    """
    edges = g.edge_list()
    eid = {e: k for k, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    def key(u, v):
        return eid[(u, v) if u < v else (v, u)]

    adj = g.adj
    for v in range(g.n):
        nb = members(adj[v])
        for a, b in itertools.combinations(nb, 2):
            if adj[a] >> b & 1:
                # triangle: never in a common induced square
                union(key(v, a), key(v, b))
                continue
            # induced squares v-a-x-b-v: x adjacent to a and b, not to v
            common = adj[a] & adj[b] & ~adj[v] & ~(1 << v)
            if not common:
                union(key(v, a), key(v, b))
                continue
            for x in members(common):
                union(key(v, a), key(b, x))
                union(key(v, b), key(a, x))
    groups: dict[int, list] = {}
    for e, k in eid.items():
        groups.setdefault(find(k), []).append(e)
    return [sorted(v) for _, v in sorted(groups.items())]


def _layer_coordinates(g: Graph, edge_set: set) -> tuple[list[int], int]:
    """Coordinate of each vertex along the factor whose edges are ``edge_set``.

    Vertices share a coordinate exactly when they are joined by a path using no
    edge of ``edge_set``.  Coordinates are numbered by first appearance.
    """
    adj = [0] * g.n
    for u, v in g.edges:
        if (u, v) not in edge_set:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    coord = [-1] * g.n
    k = 0
    for comp in sorted(component_masks(adj, g.all_mask), key=lambda c: (c & -c)):
        for v in members(comp):
            coord[v] = k
        k += 1
    return coord, k


def _split_factors(g: Graph, groups: list[set]):
    """Factor graphs and coordinates for an edge partition, or None if it is not a product."""
    coords = []
    factors = []
    for es in groups:
        c, k = _layer_coordinates(g, es)
        fe = set()
        for u, v in es:
            a, b = c[u], c[v]
            if a == b:
                return None
            fe.add((min(a, b), max(a, b)))
        coords.append(c)
        factors.append(Graph(k, fe))
    if prod(f.n for f in factors) != g.n:
        return None
    tuples = list(zip(*coords))
    if len(set(tuples)) != g.n:
        return None
    prod_graph, lab = product_of(factors)
    if prod_graph.m != g.m:
        return None
    flat = [lab.encode(t) for t in tuples]
    for u, v in g.edges:
        if not prod_graph.has_edge(flat[u], flat[v]):
            return None
    return factors, tuples


def prime_factorize(g: Graph) -> FactorizationResult:
    """Unique prime factorization of a connected graph with a verified certificate."""
    if g.n < 2:
        raise ValueError("factorization needs at least two vertices")
    if len(component_masks(g.adj, g.all_mask)) != 1:
        raise ValueError("factorization needs a connected graph")
    classes = [set(c) for c in _edge_classes(g)]
    remaining = list(range(len(classes)))
    atoms = []
    while remaining:
        found = None
        if len(remaining) == 1:
            found = tuple(remaining)
        else:
            for size in range(1, len(remaining)):
                for combo in itertools.combinations(remaining, size):
                    inside = set().union(*(classes[i] for i in combo))
                    outside = set().union(*(classes[i] for i in range(len(classes)) if i not in combo))
                    if _split_factors(g, [inside, outside]) is not None:
                        found = combo
                        break
                if found:
                    break
            if found is None:
                found = tuple(remaining)
        atoms.append(set().union(*(classes[i] for i in found)))
        remaining = [i for i in remaining if i not in found]
    split = _split_factors(g, atoms)
    if split is None:
        raise FactorizationError("prime edge classes do not re-multiply to the input graph")
    factors, tuples = split
    # canonical relabelling and ordering of the factors
    canon = [canonical_form(f) for f in factors]
    order = sorted(range(len(factors)),
                   key=lambda i: (canon[i][0].n, canon[i][0].m, canon[i][0].edge_list()))
    new_factors = tuple(canon[i][0] for i in order)
    new_coords = tuple(tuple(canon[i][1][t[i]] for i in order) for t in tuples)
    result = FactorizationResult(new_factors, new_coords)
    if not certificate_holds(g, result):
        raise FactorizationError("factorization certificate failed")
    return result


def certificate_holds(g: Graph, result: FactorizationResult) -> bool:
    """Re-multiplying the factors under the coordinates reproduces ``g`` exactly."""
    if any(f.n < 2 for f in result.factors) or len(result.coordinates) != g.n:
        return False
    lab = result.labeling
    try:
        flat = [lab.encode(c) for c in result.coordinates]
    except ValueError:
        return False
    if len(set(flat)) != g.n or lab.order != g.n:
        return False
    pg, _ = product_of(result.factors)
    if pg.m != g.m:
        return False
    return all(pg.has_edge(flat[u], flat[v]) for u, v in g.edges)


def is_prime_graph(g: Graph) -> bool:
    return len(prime_factorize(g).factors) == 1
