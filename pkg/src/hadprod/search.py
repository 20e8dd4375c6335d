"""Exact minor containment and Hadwiger number at desk scale.

Clique minors are searched on a reduced copy of the host:

* vertices whose neighborhood is a clique of fewer than ``h - 1`` vertices are
  deleted, and (for ``h >= 4``) degree-2 vertices are contracted into a
  neighbor; both preserve the existence of a ``K_h`` minor;
* connected components and clique separators split the problem, since a
  ``K_h`` minor of a clique-sum lives in one of the summands;
* what remains is a branch-and-bound over partitions of the (connected) host
  into ``h`` connected, pairwise adjacent parts.  Restricting to partitions
  loses nothing: in a connected host every unused vertex can be absorbed into
  an adjacent branch set.

Working graphs keep a *bag* per vertex, the set of original vertices it has
absorbed through contraction, so models found on a reduced graph lift back to
the original host.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, component_masks, lowest, mask_connected, members, neighborhood_mask
from .minor import MinorModel, certified, clique_model


class SearchBudgetExceeded(Exception):
    """The node budget ran out before the search could decide."""


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise SearchBudgetExceeded(f"search budget of {self.limit} nodes exhausted")


def _as_budget(budget) -> _Budget:
    return budget if isinstance(budget, _Budget) else _Budget(budget)


# -- reductions on working graphs (dict vertex -> neighbor mask) --------------

def _is_clique(adj, s: int) -> bool:
    rest = s
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if (adj[v] | low) & s != s:
            return False
        rest ^= low
    return True


def _delete(adj, bags, v):
    bit = 1 << v
    for w in members(adj[v]):
        adj[w] &= ~bit
    del adj[v]
    del bags[v]


def _contract(adj, bags, v, a):
    """Merge ``v`` into its neighbor ``a``."""
    vb, ab = 1 << v, 1 << a
    moved = adj[v] & ~ab
    for w in members(moved):
        adj[w] = (adj[w] & ~vb) | ab
    adj[a] = (adj[a] | moved) & ~vb & ~ab
    bags[a] |= bags[v]
    del adj[v]
    del bags[v]


def _reduce(adj, bags, h):
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in adj:
                continue
            nb = adj[v]
            d = nb.bit_count()
            if d < h - 1 and _is_clique(adj, nb):
                _delete(adj, bags, v)
                changed = True
            elif h >= 4 and d == 2:
                _contract(adj, bags, v, lowest(nb))
                changed = True


def _restrict(adj, bags, keep: int):
    return ({v: adj[v] & keep for v in members(keep)}, {v: bags[v] for v in members(keep)})


def _find_clique(adj, alive: int, size: int):
    def rec(cand, need):
        if need == 0:
            return []
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            r = rec(cand & adj[v], need - 1)
            if r is not None:
                return [v] + r
        return None

    return rec(alive, size)


def _cliques_up_to(adj, alive: int, max_size: int):
    """Cliques with 1..max_size vertices, smallest first."""
    def rec(clique, cand, size):
        if len(clique) == size:
            yield clique
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only higher-numbered vertices extend, so each clique appears once
            yield from rec(clique + [v], cand & adj[v], size)

    for size in range(1, max_size + 1):
        yield from rec([], alive, size)


def _clique_separator(adj, alive: int, max_size: int, limit: int = 20000):
    for count, clique in enumerate(_cliques_up_to(adj, alive, max_size)):
        if count >= limit:
            return None
        c = 0
        for v in clique:
            c |= 1 << v
        comps = component_masks(adj, alive & ~c)
        if len(comps) >= 2:
            return c, comps
    return None


# -- clique minors -------------------------------------------------------------

def _minimal_targets(ts):
    ts = sorted(set(ts), key=lambda t: (t.bit_count(), t))
    out = []
    for t in ts:
        if not any(s & ~t == 0 for s in out):
            out.append(t)
    return tuple(sorted(out))


def _partition_search(adj, h: int, budget: _Budget):
    """Partition the connected working graph into ``h`` connected, pairwise adjacent parts."""
    alive = 0
    can_single = 0
    for v, a in adj.items():
        alive |= 1 << v
        if a.bit_count() >= h - 1:
            can_single |= 1 << v
    failed = set()

    def solve(rest, k, targets):
        budget.tick()
        if k == 1:
            if mask_connected(adj, rest) and all(t & rest for t in targets):
                return [rest]
            return None
        key = (rest, k, targets)
        if key in failed:
            return None
        res = expand(rest, k, targets)
        if res is None:
            failed.add(key)
        return res

    def expand(rest, k, targets):
        nrest = rest.bit_count()
        if nrest < k:
            return None
        for t in targets:
            if t.bit_count() < k:
                return None
        if not mask_connected(adj, rest):
            return None
        singles = can_single & rest
        for t in targets:
            singles &= t
        if 2 * k - min(singles.bit_count(), k) > nrest:
            return None
        inner = 0
        for v in members(rest):
            inner += (adj[v] & rest).bit_count()
        if inner // 2 - nrest + k < k * (k - 1) // 2:
            return None
        pool = min(targets, key=lambda t: (t.bit_count(), t)) if targets else rest
        u = min(members(pool), key=lambda v: ((adj[v] & rest).bit_count(), v))
        cap = nrest - (2 * (k - 1) - min(singles.bit_count(), k - 1))
        ubit = 1 << u

        def grow(s, cand, excl):
            budget.tick()
            yield s
            if s.bit_count() >= cap:
                return
            while cand:
                x = cand & -cand
                cand ^= x
                s2 = s | x
                if all((t & ~s2).bit_count() >= k - 1 for t in targets):
                    nxt = (cand | adj[x.bit_length() - 1]) & rest & ~s2 & ~excl
                    yield from grow(s2, nxt, excl)
                excl |= x

        for s in grow(ubit, adj[u] & rest, 0):
            if s == ubit and not can_single & ubit:
                continue
            if not all(s & t for t in targets):
                continue
            rem = rest & ~s
            ns = neighborhood_mask(adj, s) & rem
            if ns.bit_count() < k - 1:
                continue
            new_targets = _minimal_targets([t & ~s for t in targets] + [ns])
            res = solve(rem, k - 1, new_targets)
            if res is not None:
                return [s] + res
        return None

    return solve(alive, h, ())


def _solve(adj, bags, h: int, budget: _Budget):
    if h <= 0:
        return []
    if not adj:
        return None
    if h == 1:
        return [bags[min(adj)]]
    _reduce(adj, bags, h)
    alive = 0
    for v in adj:
        alive |= 1 << v
    for comp in component_masks(adj, alive):
        sub_adj, sub_bags = _restrict(adj, bags, comp)
        res = _solve_connected(sub_adj, sub_bags, h, budget)
        if res is not None:
            return res
    return None


def _solve_connected(adj, bags, h: int, budget: _Budget):
    budget.tick()
    n = len(adj)
    if n < h:
        return None
    if h == 2:
        u = min(adj)
        return [bags[u], bags[lowest(adj[u])]]
    m = sum(a.bit_count() for a in adj.values()) // 2
    if m - n + h < h * (h - 1) // 2:
        return None
    alive = 0
    for v in adj:
        alive |= 1 << v
    clique = _find_clique(adj, alive, h)
    if clique is not None:
        return [bags[v] for v in clique]
    sep = _clique_separator(adj, alive, h - 1)
    if sep is not None:
        c, comps = sep
        for comp in comps:
            sub_adj, sub_bags = _restrict(adj, bags, comp | c)
            res = _solve(sub_adj, sub_bags, h, budget)
            if res is not None:
                return res
        return None
    parts = _partition_search(adj, h, budget)
    if parts is None:
        return None
    out = []
    for p in parts:
        b = 0
        for v in members(p):
            b |= bags[v]
        out.append(b)
    return out


def find_clique_minor(g: Graph, h: int, budget=None) -> list[int] | None:
    """Branch sets (as bitmasks) of a ``K_h`` minor of ``g``, or None if there is none.

    Raises :class:`SearchBudgetExceeded` when the node budget runs out.
    """
    if h < 0:
        raise ValueError("clique size must be nonnegative")
    if h > g.n:
        return None
    adj = {v: a for v, a in enumerate(g.adj)}
    bags = {v: 1 << v for v in range(g.n)}
    return _solve(adj, bags, h, _as_budget(budget))


# -- general patterns ---------------------------------------------------------

def _connected_sets(adj, u: int, within: int, cap: int, budget: _Budget):
    def grow(s, cand, excl):
        budget.tick()
        yield s
        if s.bit_count() >= cap:
            return
        while cand:
            x = cand & -cand
            cand ^= x
            s2 = s | x
            nxt = (cand | adj[x.bit_length() - 1]) & within & ~s2 & ~excl
            yield from grow(s2, nxt, excl)
            excl |= x

    ubit = 1 << u
    yield from grow(ubit, adj[u] & within & ~ubit, 0)


def _pattern_partition(adj, comp: int, pattern: Graph, pverts: list[int], budget: _Budget):
    """Partition host component ``comp`` into branch sets for pattern vertices ``pverts``."""
    padj = pattern.adj
    order = sorted(pverts, key=lambda x: (-pattern.degree(x), x))

    def solve(rest, assigned):
        budget.tick()
        todo = [x for x in order if x not in assigned]
        if not todo:
            return dict(assigned) if rest == 0 else None
        if rest.bit_count() < len(todo):
            return None
        if len(component_masks(adj, rest)) > len(todo):
            return None
        reach = {y: neighborhood_mask(adj, s) for y, s in assigned.items()}
        for z in todo:
            for y in members(padj[z]):
                if y in assigned and not reach[y] & rest:
                    return None
        u = lowest(rest)
        cap = rest.bit_count() - (len(todo) - 1)
        for x in todo:
            need = [reach[y] for y in members(padj[x]) if y in assigned]
            if len(todo) == 1:
                candidates = [rest] if mask_connected(adj, rest) else []
            else:
                candidates = _connected_sets(adj, u, rest, cap, budget)
            for s in candidates:
                if not all(s & r for r in need):
                    continue
                assigned[x] = s
                res = solve(rest & ~s, assigned)
                del assigned[x]
                if res is not None:
                    return res
        return None

    return solve(comp, {})


def _general_minor(host: Graph, pattern: Graph, budget: _Budget):
    adj = host.adj
    hcomps = component_masks(adj, host.all_mask)
    pcomps = [members(c) for c in component_masks(pattern.adj, pattern.all_mask)]
    pcomps.sort(key=len, reverse=True)
    load = [[] for _ in hcomps]

    def place(i):
        if i == len(pcomps):
            out = {}
            for hc, pcs in zip(hcomps, load):
                if not pcs:
                    continue
                pverts = sorted(x for pc in pcs for x in pc)
                res = _pattern_partition(adj, hc, pattern, pverts, budget)
                if res is None:
                    return None
                out.update(res)
            return out
        for j, hc in enumerate(hcomps):
            used = sum(len(pc) for pc in load[j])
            if used + len(pcomps[i]) > hc.bit_count():
                continue
            load[j].append(pcomps[i])
            res = place(i + 1)
            load[j].pop()
            if res is not None:
                return res
        return None

    return place(0)


def has_minor(host: Graph, pattern: Graph, budget=None) -> MinorModel | None:
    """A verified model of ``pattern`` in ``host``, or None when none exists.

    ``budget`` caps the number of search nodes; running out raises
    :class:`SearchBudgetExceeded`, which is not the same as "no".
    """
    b = _as_budget(budget)
    if pattern.n == 0:
        return MinorModel(host, pattern, ())
    if pattern.n > host.n or pattern.m > host.m:
        return None
    if pattern.is_complete():
        masks = find_clique_minor(host, pattern.n, b)
        if masks is None:
            return None
        return certified(MinorModel.build(host, pattern, [members(s) for s in masks]))
    found = _general_minor(host, pattern, b)
    if found is None:
        return None
    return certified(MinorModel.build(host, pattern, [members(found[x]) for x in range(pattern.n)]))


# -- Hadwiger number ----------------------------------------------------------

@dataclass(frozen=True)
class HadwigerResult:
    value: int
    witness: MinorModel
    exact: bool
    nodes: int = 0


def edge_count_bound(g: Graph) -> int:
    """Upper bound on the Hadwiger number from edge and vertex counts.

    A ``K_h`` model inside a connected component with ``n`` vertices and ``m``
    edges can be taken to partition the component, so ``m >= (n - h) + h(h-1)/2``.
    """
    best = 0
    for comp in component_masks(g.adj, g.all_mask):
        n = comp.bit_count()
        m = sum((g.adj[v] & comp).bit_count() for v in members(comp)) // 2
        h = 1
        while h + 1 <= n and m - n + (h + 1) >= (h + 1) * h // 2:
            h += 1
        best = max(best, h)
    return best


def hadwiger_exact(g: Graph, budget=None) -> HadwigerResult:
    """Largest ``h`` with ``K_h ⪯ g``, with a verified witness.

    The value is raised one step at a time until a ``K_{h+1}`` search
    completes with no model.  If the budget runs out first, the best certified
    lower bound is returned with ``exact=False``.
    """
    b = _as_budget(budget)
    if g.n == 0:
        return HadwigerResult(0, MinorModel(g, Graph(0), ()), True, 0)
    if g.is_complete():
        return HadwigerResult(g.n, clique_model(g, [[v] for v in range(g.n)]), True, 0)
    adj = {v: a for v, a in enumerate(g.adj)}
    omega = 1
    best_clique = [0]
    while True:
        c = _find_clique(adj, g.all_mask, omega + 1)
        if c is None:
            break
        omega += 1
        best_clique = c
    witness = clique_model(g, [[v] for v in best_clique])
    upper = edge_count_bound(g)
    h = omega + 1
    while h <= upper:
        try:
            masks = find_clique_minor(g, h, b)
        except SearchBudgetExceeded:
            return HadwigerResult(h - 1, witness, False, b.nodes)
        if masks is None:
            break
        witness = clique_model(g, masks)
        h += 1
    return HadwigerResult(h - 1, witness, True, b.nodes)
