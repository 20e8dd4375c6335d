"""Minor models (branch-set certificates) and their verification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, mask_connected, mask_of, members, neighborhood_mask, parse_graph6, write_graph6
from .product import cartesian_product


@dataclass(frozen=True)
class MinorModel:
    """Branch set ``branch_sets[x]`` of ``host`` for each vertex ``x`` of ``pattern``."""

    host: Graph
    pattern: Graph
    branch_sets: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, host: Graph, pattern: Graph, sets) -> "MinorModel":
        return cls(host, pattern, tuple(tuple(sorted(s)) for s in sets))

    @classmethod
    def trivial(cls, g: Graph) -> "MinorModel":
        """``g`` as a minor of itself via singletons."""
        return cls(g, g, tuple((v,) for v in range(g.n)))

    @property
    def masks(self) -> list[int]:
        return [mask_of(s) for s in self.branch_sets]

    def to_json(self) -> dict:
        return {
            "host": write_graph6(self.host).decode(),
            "pattern": write_graph6(self.pattern).decode(),
            "branch_sets": [list(s) for s in self.branch_sets],
        }

    @classmethod
    def from_json(cls, doc) -> "MinorModel":
        if isinstance(doc, (str, bytes)):
            doc = json.loads(doc)
        return cls.build(parse_graph6(doc["host"]), parse_graph6(doc["pattern"]), doc["branch_sets"])


@dataclass(frozen=True)
class Violation:
    kind: str  # "overlap" | "disconnected" | "missing-adjacency"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "violations": [{"kind": v.kind, "pattern_vertices": list(v.vertices)}
                               for v in self.violations]}


class ModelVerificationError(AssertionError):
    """An operation was about to emit a model that does not verify."""


def verify_model(m: MinorModel) -> VerificationReport:
    if len(m.branch_sets) != m.pattern.n:
        raise ValueError(f"{len(m.branch_sets)} branch sets for a pattern on {m.pattern.n} vertices")
    for x, s in enumerate(m.branch_sets):
        if not s:
            raise ValueError(f"branch set {x} is empty")
        if min(s) < 0 or max(s) >= m.host.n:
            raise ValueError(f"branch set {x} has a vertex outside the host")
    masks = m.masks
    adj = m.host.adj
    violations = []
    for x in range(len(masks)):
        for y in range(x + 1, len(masks)):
            if masks[x] & masks[y]:
                violations.append(Violation("overlap", (x, y)))
    for x, s in enumerate(masks):
        if not mask_connected(adj, s):
            violations.append(Violation("disconnected", (x,)))
    reach = [neighborhood_mask(adj, s) for s in masks]
    for x, y in m.pattern.edge_list():
        if not reach[x] & masks[y]:
            violations.append(Violation("missing-adjacency", (x, y)))
    return VerificationReport(tuple(violations))


def certified(m: MinorModel) -> MinorModel:
    report = verify_model(m)
    if not report.ok:
        raise ModelVerificationError(f"model failed verification: {report.violations[:5]}")
    return m


def _require_verified(m: MinorModel, what: str):
    if not verify_model(m).ok:
        raise ValueError(f"{what} does not verify")


def product_of_models(m1: MinorModel, m2: MinorModel) -> MinorModel:
    """Model of ``P1 □ P2`` in ``G1 □ G2`` built from models of ``P1`` in ``G1`` and ``P2`` in ``G2``.

    Pattern vertex ``<x, y>`` gets the cross ``(V_x × {r_y}) ∪ ({r_x} × V_y)``
    where ``r`` is the minimum vertex of a branch set.
    """
    _require_verified(m1, "first model")
    _require_verified(m2, "second model")
    host, _ = cartesian_product(m1.host, m2.host)
    pattern, _ = cartesian_product(m1.pattern, m2.pattern)
    n2 = m2.host.n
    sets = []
    for vx in m1.branch_sets:
        rx = vx[0]
        for vy in m2.branch_sets:
            ry = vy[0]
            s = {a * n2 + ry for a in vx}
            s.update(rx * n2 + b for b in vy)
            sets.append(s)
    return certified(MinorModel.build(host, pattern, sets))


def compose_models(outer: MinorModel, inner: MinorModel) -> MinorModel:
    """Given ``P ⪯ M`` (outer) and ``M ⪯ G`` (inner), return ``P ⪯ G``."""
    if outer.host != inner.pattern:
        raise ValueError("outer model's host is not the inner model's pattern")
    _require_verified(outer, "outer model")
    _require_verified(inner, "inner model")
    sets = []
    for bs in outer.branch_sets:
        s = set()
        for v in bs:
            s.update(inner.branch_sets[v])
        sets.append(s)
    return certified(MinorModel.build(inner.host, outer.pattern, sets))


def transpose_model(m: MinorModel, n1: int, n2: int) -> MinorModel:
    """Re-express a model hosted on ``A □ B`` (sizes n1, n2) on ``B □ A``."""
    if m.host.n != n1 * n2:
        raise ValueError("host size does not match the factor sizes")
    perm = [(v % n2) * n1 + v // n2 for v in range(m.host.n)]
    host = m.host.relabel(perm)
    return certified(MinorModel.build(host, m.pattern, [[perm[v] for v in s] for s in m.branch_sets]))


def clique_model(host: Graph, sets) -> MinorModel:
    from .generators import complete

    sets = list(sets)
    return certified(MinorModel.build(host, complete(len(sets)), [members(s) if isinstance(s, int) else s
                                                                    for s in sets]))
