"""Finite fields GF(p) and GF(p^2) and affine planes over them."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldContext:
    """GF(p^e), e in {1, 2}.  For e = 2 the element a + b·α is encoded as a + b·p,
    where α is a root of the irreducible ``x^2 + b1·x + c0``."""

    p: int
    e: int = 1
    b1: int = 0
    c0: int = 0

    @property
    def q(self) -> int:
        return self.p ** self.e

    def _check(self, *xs):
        for x in xs:
            if not 0 <= x < self.q:
                raise ValueError(f"element {x} outside GF({self.q})")

    def add(self, x: int, y: int) -> int:
        self._check(x, y)
        p = self.p
        if self.e == 1:
            return (x + y) % p
        return (x % p + y % p) % p + ((x // p + y // p) % p) * p

    def neg(self, x: int) -> int:
        self._check(x)
        p = self.p
        if self.e == 1:
            return -x % p
        return (-(x % p)) % p + ((-(x // p)) % p) * p

    def mul(self, x: int, y: int) -> int:
        self._check(x, y)
        p = self.p
        if self.e == 1:
            return x * y % p
        a1, b1 = x % p, x // p
        a2, b2 = y % p, y // p
        # α^2 = -(b1·α + c0)
        bb = b1 * b2
        a = (a1 * a2 - self.c0 * bb) % p
        b = (a1 * b2 + a2 * b1 - self.b1 * bb) % p
        return a + b * p

    def inv(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.e == 1:
            return pow(x, self.p - 2, self.p)
        # x^(q-2) = x^-1 in the multiplicative group of order q-1
        result, base, k = 1, x, self.q - 2
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)


def field_context(p: int, e: int = 1) -> FieldContext:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e == 1:
        return FieldContext(p, 1)
    if e != 2:
        raise ValueError("only degrees 1 and 2 are supported")
    for b in range(p):
        for c in range(p):
            if all((x * x + b * x + c) % p for x in range(p)):
                return FieldContext(p, 2, b, c)
    raise AssertionError("no irreducible quadratic found")  # unreachable for prime p


def prime_power_parts(q: int) -> tuple[int, int]:
    """(p, e) with q = p^e, e in {1, 2}; ValueError otherwise."""
    if is_prime(q):
        return q, 1
    r = int(round(q ** 0.5))
    for s in (r - 1, r, r + 1):
        if s > 1 and s * s == q and is_prime(s):
            return s, 2
    raise ValueError(f"{q} is not a prime or the square of a prime")


@dataclass(frozen=True)
class AffinePlane:
    """Points ``0..order^2-1``; ``classes[i][t]`` is line t of parallel class i."""

    order: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def lines(self) -> list[tuple[int, ...]]:
        return [line for cls in self.classes for line in cls]

    def to_json(self) -> dict:
        return {"order": self.order, "classes": [[list(l) for l in c] for c in self.classes]}

    @classmethod
    def from_json(cls, doc) -> "AffinePlane":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(doc["order"], tuple(tuple(tuple(l) for l in c) for c in doc["classes"]))


def affine_plane(q: int) -> AffinePlane:
    """AG(2, q).  Point (x, y) is ``x*q + y``.  Classes: slope a = 0..q-1 with
    lines ``{(x, a·x + b)}`` indexed by intercept b, then the vertical class
    ``{(c, y)}`` indexed by c."""
    p, e = prime_power_parts(q)
    f = field_context(p, e)
    mul = [[f.mul(a, x) for x in range(q)] for a in range(q)]
    add = [[f.add(u, b) for b in range(q)] for u in range(q)]
    classes = []
    for a in range(q):
        cls = []
        for b in range(q):
            cls.append(tuple(sorted(x * q + add[mul[a][x]][b] for x in range(q))))
        classes.append(tuple(cls))
    classes.append(tuple(tuple(c * q + y for y in range(q)) for c in range(q)))
    plane = AffinePlane(q, tuple(classes))
    bad = plane_violations(plane)
    if bad:
        raise AssertionError(f"constructed plane fails its axioms: {bad[0]}")
    return plane


def plane_violations(pl: AffinePlane) -> list[str]:
    """Every way ``pl`` departs from the affine-plane axioms (empty when it is one)."""
    m = pl.order
    npts = m * m
    out = []
    if len(pl.classes) != m + 1:
        out.append(f"expected {m + 1} parallel classes, found {len(pl.classes)}")
    # which_line[i][pt]: index of the line of class i through pt, -1 if none
    which = np.full((len(pl.classes), npts), -1, dtype=np.int64)
    for i, cls in enumerate(pl.classes):
        if len(cls) != m:
            out.append(f"class {i} has {len(cls)} lines, expected {m}")
        for t, line in enumerate(cls):
            if len(line) != m or len(set(line)) != m:
                out.append(f"line ({i}, {t}) does not have {m} distinct points")
            for pt in line:
                if not 0 <= pt < npts:
                    out.append(f"line ({i}, {t}) has point {pt} out of range")
                elif which[i, pt] != -1:
                    out.append(f"lines ({i}, {which[i, pt]}) and ({i}, {t}) share point {pt}")
                else:
                    which[i, pt] = t
        missing = np.flatnonzero(which[i] == -1)
        if missing.size:
            out.append(f"class {i} does not cover point {int(missing[0])}")
    if out:
        return out
    # intersection table of every pair of lines from different classes
    for i in range(len(pl.classes)):
        for j in range(i + 1, len(pl.classes)):
            table = np.bincount(which[i] * m + which[j], minlength=m * m)
            if not np.all(table == 1):
                t = int(np.flatnonzero(table != 1)[0])
                out.append(f"lines ({i}, {t // m}) and ({j}, {t % m}) meet in "
                           f"{int(table[t])} points, expected 1")
    return out


def verify_plane(pl: AffinePlane) -> bool:
    return not plane_violations(pl)
