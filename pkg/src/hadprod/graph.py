"""Simple undirected graphs over dense integer vertices.

Adjacency is held as one bitmask per vertex (bit ``v`` of ``adj[u]`` is set
iff ``u`` and ``v`` are adjacent).  Vertex sets used by the search kernels are
plain ``int`` bitmasks as well; :func:`mask_of` and :func:`members` convert.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_adj", "_edges", "_nbrs", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._edges = None
        self._nbrs = None
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[int], check: bool = True) -> "Graph":
        """Build from per-vertex neighbor bitmasks."""
        g = cls.__new__(cls)
        n = len(adj)
        adj = tuple(adj)
        if check:
            full = (1 << n) - 1
            for u, a in enumerate(adj):
                if a & ~full:
                    raise ValueError(f"neighbor of {u} out of range")
                if a >> u & 1:
                    raise ValueError(f"loop at vertex {u}")
                rest = a
                while rest:
                    low = rest & -rest
                    v = low.bit_length() - 1
                    if not adj[v] >> u & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
                    rest ^= low
        g.n = n
        g._adj = adj
        g._edges = None
        g._nbrs = None
        g._hash = None
        return g

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        if self._edges is None:
            es = []
            for u, a in enumerate(self._adj):
                es.extend((u, v) for v in members(a >> (u + 1) << (u + 1)))
            self._edges = frozenset(es)
        return self._edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._nbrs is None:
            self._nbrs = tuple(tuple(members(a)) for a in self._adj)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def is_complete(self) -> bool:
        full = self.all_mask
        return all(a | (1 << u) == full for u, a in enumerate(self._adj))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled ``0..k-1`` in increasing order of the kept vertices.

        Returns the subgraph and the list mapping new index -> old index.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), es), keep

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u}, {v})")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_adjacency(adj, check=False)

    def without_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph(w for w in range(self.n) if w != v)[0]

    def contract_edge(self, u: int, v: int) -> "Graph":
        """``G.e`` for ``e = (u, v)``; the merged vertex takes the smaller index."""
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u}, {v})")
        a, b = min(u, v), max(u, v)
        relabel = [w if w < b else w - 1 for w in range(self.n)]
        relabel[b] = a
        es = set()
        for x, y in self.edges:
            x2, y2 = relabel[x], relabel[y]
            if x2 != y2:
                es.add((min(x2, y2), max(x2, y2)))
        return Graph(self.n - 1, es)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced by ``within``."""
    comps = []
    left = within
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & within & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def mask_connected(adj: Sequence[int], within: int) -> bool:
    if not within:
        return False
    seen = within & -within
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen == within


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (the empty graph counts as connected)."""
    if g.n == 0:
        return True
    return mask_connected(g.adj, g.all_mask)


def induced_is_connected(g: Graph, s: Iterable[int]) -> bool:
    mask = mask_of(s)
    if not mask:
        raise ValueError("vertex set must be nonempty")
    if mask >> g.n:
        raise ValueError("vertex set exceeds host range")
    return mask_connected(g.adj, mask)


def components(g: Graph) -> list[list[int]]:
    return [members(c) for c in component_masks(g.adj, g.all_mask)]


def neighborhood_mask(adj: Sequence[int], s: int) -> int:
    """Vertices adjacent to some member of ``s`` (members of ``s`` included)."""
    out = 0
    while s:
        low = s & -s
        out |= adj[low.bit_length() - 1]
        s ^= low
    return out


# -- serialization -----------------------------------------------------------

_G6_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    pass


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph6 supports at most 2^36 - 1 vertices")


def write_graph6(g: Graph, header: bool = False) -> bytes:
    out = bytearray(_G6_HEADER if header else b"")
    out += _g6_size(g.n)
    # column j contributes bits x(0,j) .. x(j-1,j) in that order
    cols = [format(g.adj[j] & ((1 << j) - 1), f"0{j}b")[::-1] for j in range(1, g.n)]
    bits = "".join(cols)
    bits += "0" * (-len(bits) % 6)
    out += bytes(int(bits[i:i + 6], 2) + 63 for i in range(0, len(bits), 6))
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise Graph6Error("empty graph6 input")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the printable graph6 range 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 36-bit length prefix")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
        if n < 258048:
            raise Graph6Error("non-canonical 36-bit length prefix")
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 18-bit length prefix")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
        if n < 63:
            raise Graph6Error("non-canonical 18-bit length prefix")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after adjacency data")
    bits = "".join(format(b - 63, "06b") for b in body)
    if "1" in bits[nbits:]:
        raise Graph6Error("nonzero padding bits")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        col = int(bits[pos:pos + j][::-1], 2)
        pos += j
        adj[j] |= col
        while col:
            low = col & -col
            adj[low.bit_length() - 1] |= 1 << j
            col ^= low
    return Graph.from_adjacency(adj, check=False)


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-based).  A line holding a single integer fixes the vertex count."""
    n = None
    es = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(nums) == 1:
            n = nums[0]
        elif len(nums) == 2:
            es.append((nums[0], nums[1]))
        else:
            raise ValueError(f"line {lineno}: expected 'u v'")
    if n is None:
        n = 1 + max((max(e) for e in es), default=-1)
    return Graph(n, es)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def export_dot(g: Graph, model=None) -> str:
    """DOT text for ``g``; a minor model colors each branch set distinctly."""
    colour = {}
    if model is not None:
        if model.host != g:
            raise ValueError("model host differs from the graph being exported")
        k = len(model.branch_sets)
        for x, bs in enumerate(model.branch_sets):
            hue = x / k if k else 0.0
            for v in bs:
                colour[v] = (x, f"{hue:.4f} 0.700 0.950")
    lines = ["graph G {"]
    for v in range(g.n):
        if v in colour:
            x, c = colour[v]
            lines.append(f'  {v} [style=filled, fillcolor="{c}", branch={x}];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edge_list():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
