"""Exact coloring, critical subgraphs and fan minors of k-chromatic graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .generators import fan
from .graph import Graph, members
from .minor import MinorModel, certified
from .search import _find_clique


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k``, one per vertex."""

    k: int
    colors: tuple[int, ...]

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        if any(not 1 <= c <= self.k for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, doc) -> "Coloring":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(doc["k"], tuple(doc["colors"]))


def _dsatur_greedy(g: Graph) -> list[int]:
    colors = [0] * g.n
    sat = [0] * g.n
    left = set(range(g.n))
    deg = g.degrees()
    while left:
        v = max(left, key=lambda x: (sat[x].bit_count(), deg[x], -x))
        c = 1
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        left.discard(v)
        for w in g.neighbors(v):
            sat[w] |= 1 << c
    return colors


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper k-coloring, or None when none exists.

    DSATUR branching; a vertex may take any color already in use or the next
    unused one, which removes color-permutation symmetry.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.n
    if n == 0:
        return Coloring(k, ())
    if k == 0:
        return None
    nbrs = [g.neighbors(v) for v in range(n)]
    deg = g.degrees()
    colors = [0] * n
    # counts[v][c]: neighbors of v currently colored c
    counts = [[0] * (k + 1) for _ in range(n)]
    sat = [0] * n

    def pick():
        best, key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            kv = (sat[v].bit_count(), deg[v])
            if key is None or kv > key:
                best, key = v, kv
        return best

    def assign(v, c):
        colors[v] = c
        for w in nbrs[v]:
            counts[w][c] += 1
            if counts[w][c] == 1:
                sat[w] |= 1 << c

    def unassign(v, c):
        colors[v] = 0
        for w in nbrs[v]:
            counts[w][c] -= 1
            if counts[w][c] == 0:
                sat[w] &= ~(1 << c)

    def rec(done, used):
        if done == n:
            return True
        v = pick()
        if sat[v].bit_count() >= k:
            return False
        for c in range(1, min(used + 1, k) + 1):
            if sat[v] >> c & 1:
                continue
            assign(v, c)
            if rec(done + 1, max(used, c)):
                return True
            unassign(v, c)
        return False

    if not rec(0, 0):
        return None
    return Coloring(k, tuple(colors))


def max_clique(g: Graph) -> list[int]:
    adj = {v: a for v, a in enumerate(g.adj)}
    best = [0] if g.n else []
    size = len(best)
    while True:
        c = _find_clique(adj, g.all_mask, size + 1)
        if c is None:
            return best
        best, size = c, size + 1


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    if g.n == 0:
        return 0, Coloring(0, ())
    greedy = _dsatur_greedy(g)
    upper = max(greedy)
    lower = len(max_clique(g))
    for k in range(lower, upper):
        col = is_k_colorable(g, k)
        if col is not None:
            assert col.is_proper(g)
            return k, col
    col = Coloring(upper, tuple(greedy))
    assert col.is_proper(g)
    return upper, col


def critical_subgraph_with_map(g: Graph) -> tuple[Graph, list[int]]:
    """A χ-critical subgraph and the original index of each of its vertices.

    Vertices are tried for removal smallest current degree first, then edges in
    sorted order; a removal is kept whenever χ does not drop.
    """
    if g.n < 1:
        raise ValueError("graph must have a vertex")
    k, _ = chromatic_number(g)
    keep = set(range(g.n))
    tried = set()
    adj = list(g.adj)
    while True:
        cand = [v for v in keep if v not in tried]
        if not cand:
            break
        alive = sum(1 << v for v in keep)
        v = min(cand, key=lambda x: ((adj[x] & alive).bit_count(), x))
        tried.add(v)
        sub, _ = g.induced_subgraph(keep - {v})
        if chromatic_number(sub)[0] == k:
            keep.discard(v)
    h, index = g.induced_subgraph(keep)
    for u, v in h.edge_list():
        trial = h.without_edge(u, v)
        if chromatic_number(trial)[0] == k:
            h = trial
    return h, index


def critical_subgraph(g: Graph) -> Graph:
    return critical_subgraph_with_map(g)[0]


def _maximal_path(h: Graph, start: int) -> list[int]:
    """Simple path grown greedily at both ends until neither end can extend."""
    path = [start]
    on = 1 << start
    for _ in range(2):
        while True:
            free = h.adj[path[-1]] & ~on
            if not free:
                break
            w = (free & -free).bit_length() - 1
            path.append(w)
            on |= 1 << w
        path.reverse()
    return path


def extract_w_minor(g: Graph) -> MinorModel:
    """Model of the fan ``W_k`` in ``g`` where ``k = χ(g)``.

    Inside a k-critical subgraph (minimum degree at least k-1), a path that
    cannot be extended at its first vertex ``v0`` has every neighbor of ``v0``
    on it.  With ``k-1`` of those neighbors at positions ``i_1 < ... < i_{k-1}``,
    the hub is ``{v0}`` and fan vertex ``j`` is the sub-path ``(i_{j-1}, i_j]``.
    """
    k, _ = chromatic_number(g)
    if k < 2:
        raise ValueError("need a graph with chromatic number at least 2")
    h, index = critical_subgraph_with_map(g)
    assert min(h.degrees()) >= k - 1
    path = _maximal_path(h, 0)
    v0 = path[0]
    pos = {v: i for i, v in enumerate(path)}
    nb = members(h.adj[v0])
    assert all(w in pos for w in nb), "path end has a neighbor off the path"
    picks = sorted(pos[w] for w in nb)[: k - 1]
    sets = [[index[v0]]]
    prev = 0
    for i in picks:
        sets.append([index[path[t]] for t in range(prev + 1, i + 1)])
        prev = i
    return certified(MinorModel.build(g, fan(k), sets))
