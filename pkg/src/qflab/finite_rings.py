"""Small finite rings given by tables, and modules over them presented by relations."""

from __future__ import annotations

import itertools
from typing import Sequence

from .exact.fields import Ring
from .modules import FiniteCarrier


class FiniteRing(Ring):
    """A finite commutative ring on elements 0..k-1 with explicit tables."""

    def __init__(self, name: str, labels: Sequence[str], add_table, mul_table, zero: int = 0, one: int = 1,
                 generators: Sequence[int] | None = None):
        self.name = name
        self.labels = tuple(labels)
        self._add = tuple(tuple(r) for r in add_table)
        self._mul = tuple(tuple(r) for r in mul_table)
        self._zero, self._one = zero, one
        k = len(self.labels)
        self._neg = tuple(next(b for b in range(k) if self._add[a][b] == zero) for a in range(k))
        self._gens = list(generators) if generators is not None else list(range(k))

    def __repr__(self):
        return self.name

    @property
    def order(self) -> int:  # type: ignore[override]
        return len(self.labels)

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        n, x = 1, self._one
        while x != self._zero:
            x, n = self._add[x][self._one], n + 1
        return n

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def coerce(self, c):
        if isinstance(c, int):
            return self.from_int(c)
        raise TypeError(f"cannot coerce {c!r} into {self.name}")

    def from_int(self, n: int):
        x = self._zero
        for _ in range(abs(n)):
            x = self.add(x, self._one)
        return self.neg(x) if n < 0 else x

    def is_zero(self, a) -> bool:
        return a == self._zero

    def render(self, a) -> str:
        return self.labels[a]

    def elements(self):
        return iter(range(self.order))

    def additive_generators(self):
        return list(self._gens)


def zmod(n: int) -> FiniteRing:
    if n < 2:
        raise ValueError("modulus must be at least 2")
    r = range(n)
    return FiniteRing(f"Z/{n}", [str(a) for a in r], [[(a + b) % n for b in r] for a in r],
                      [[(a * b) % n for b in r] for a in r], generators=[1])


def presented_module(S: FiniteRing, rank: int, relations: Sequence[Sequence[int]] = (), name: str | None = None) -> FiniteCarrier:
    """S^rank modulo the S-span of the relation vectors; elements are coset minima."""
    rels = [tuple(r) for r in relations]
    if any(len(r) != rank for r in rels):
        raise ValueError("relations must have one entry per generator")
    elems = list(range(S.order))

    def vadd(a, b):
        return tuple(S.add(x, y) for x, y in zip(a, b))

    sub = set()
    for coeffs in itertools.product(elems, repeat=len(rels)):
        v = (S.zero(),) * rank
        for c, r in zip(coeffs, rels):
            v = vadd(v, tuple(S.mul(c, x) for x in r))
        sub.add(v)
    canon_cache: dict = {}

    def canon(v):
        v = tuple(v)
        if v not in canon_cache:
            canon_cache[v] = min(vadd(v, u) for u in sub)
        return canon_cache[v]

    reps = sorted({canon(v) for v in itertools.product(elems, repeat=rank)})
    gens = [tuple(g if j == i else S.zero() for j in range(rank)) for i in range(rank) for g in S.additive_generators()]
    return FiniteCarrier(
        S, reps, vadd, lambda s, x: tuple(S.mul(s, y) for y in x), canon=canon, generators=gens,
        render=lambda v: "(" + ", ".join(S.render(x) for x in v) + ")",
        name=name or f"{S.name}^{rank}/<{len(rels)} relations>",
    )
