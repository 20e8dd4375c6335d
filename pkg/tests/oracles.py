"""Independent reference implementations used only by the tests.

These are deliberately naive (networkx plus exhaustive enumeration) so they
share no code with the package under test.
"""

import itertools

import networkx as nx

from hadprod.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edge_list())
    return out


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def eta_brute(g: Graph) -> int:
    """Hadwiger number by trying every partition of every component."""
    h = to_nx(g)
    best = 0
    for comp in nx.connected_components(h):
        for p in set_partitions(sorted(comp)):
            if len(p) <= best:
                continue
            if not all(nx.is_connected(h.subgraph(s)) for s in p):
                continue
            if all(any(h.has_edge(a, b) for a in s for b in t) for s, t in itertools.combinations(p, 2)):
                best = len(p)
    return best


def chi_brute(g: Graph) -> int:
    for k in range(g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edge_list()):
                return k
    raise AssertionError


def has_minor_brute(host: Graph, pattern: Graph) -> bool:
    """Assign each host vertex to a pattern vertex or to nobody, exhaustively."""
    h = to_nx(host)
    k = pattern.n
    for labels in itertools.product(range(k + 1), repeat=host.n):
        sets = [[v for v in range(host.n) if labels[v] == x] for x in range(k)]
        if any(not s or not nx.is_connected(h.subgraph(s)) for s in sets):
            continue
        if all(any(h.has_edge(a, b) for a in sets[x] for b in sets[y]) for x, y in pattern.edge_list()):
            return True
    return False


def isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(to_nx(a), to_nx(b))
