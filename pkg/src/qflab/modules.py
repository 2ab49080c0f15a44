"""Module carriers over the rings used by quadratic maps.

Every carrier exposes add/sub/neg/zero/act/key/render. Finite carriers also
expose ``elements()`` and ``additive_generators()``; the latter generate the
carrier as an abelian group, which is all the exhaustive checks need.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .algebra import FiniteDimAlgebra
from .exact.fields import PrimeField, Ring


def ring_is_finite(ring: Ring) -> bool:
    try:
        return ring.order is not None
    except AttributeError:
        return False


def ring_additive_generators(ring: Ring) -> list | None:
    """Additive generators of a finite ring, or None when unknown or infinite."""
    if isinstance(ring, PrimeField):
        return [1]
    if isinstance(ring, FiniteDimAlgebra) and isinstance(ring.field, PrimeField):
        return ring.basis_vectors()
    gens = getattr(ring, "additive_generators", None)
    return gens() if callable(gens) else None


class RegularModule:
    """The ring acting on itself."""

    def __init__(self, ring: Ring):
        self.ring = ring

    def __repr__(self):
        return f"RegularModule({self.ring!r})"

    @property
    def finite(self) -> bool:
        return ring_is_finite(self.ring)

    def zero(self):
        return self.ring.zero()

    def add(self, a, b):
        return self.ring.add(a, b)

    def sub(self, a, b):
        return self.ring.sub(a, b)

    def neg(self, a):
        return self.ring.neg(a)

    def act(self, s, x):
        return self.ring.mul(s, x)

    def eq(self, a, b) -> bool:
        return self.ring.eq(a, b)

    def is_zero(self, a) -> bool:
        return self.ring.is_zero(a)

    def key(self, a):
        return a

    def render(self, a) -> str:
        return self.ring.render(a)

    def elements(self):
        return list(self.ring.elements())

    def additive_generators(self):
        return ring_additive_generators(self.ring)

    def coordinates(self, a) -> tuple:
        """Prime-field coordinates; only for algebras over a prime field."""
        if isinstance(self.ring, FiniteDimAlgebra):
            return tuple(a)
        return (a,)


class FreeModule:
    """ring^rank with elements as tuples of ring elements."""

    def __init__(self, ring: Ring, rank: int):
        if rank < 0:
            raise ValueError("rank must be non-negative")
        self.ring = ring
        self.rank = rank

    def __repr__(self):
        return f"FreeModule({self.ring!r}, {self.rank})"

    @property
    def finite(self) -> bool:
        return ring_is_finite(self.ring)

    def zero(self):
        return tuple(self.ring.zero() for _ in range(self.rank))

    def vector(self, *entries):
        return tuple(self.ring.coerce(e) for e in entries)

    def basis(self, i: int):
        R = self.ring
        return tuple(R.one() if j == i else R.zero() for j in range(self.rank))

    def add(self, a, b):
        return tuple(self.ring.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.ring.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.ring.neg(x) for x in a)

    def act(self, s, x):
        return tuple(self.ring.mul(s, y) for y in x)

    def eq(self, a, b) -> bool:
        return all(self.ring.eq(x, y) for x, y in zip(a, b))

    def is_zero(self, a) -> bool:
        return all(self.ring.is_zero(x) for x in a)

    def key(self, a):
        return tuple(a)

    def render(self, a) -> str:
        return "(" + ", ".join(self.ring.render(x) for x in a) + ")"

    def elements(self):
        elems = list(self.ring.elements())
        return [tuple(c) for c in itertools.product(elems, repeat=self.rank)]

    def additive_generators(self):
        gens = ring_additive_generators(self.ring)
        if gens is None:
            return None
        R = self.ring
        return [tuple(g if j == i else R.zero() for j in range(self.rank)) for i in range(self.rank) for g in gens]

    def coordinates(self, a) -> tuple:
        out: tuple = ()
        for x in a:
            out += tuple(x) if isinstance(self.ring, FiniteDimAlgebra) else (x,)
        return out


class FiniteCarrier:
    """A finite module given by an explicit element list and operations.

    ``canon`` maps an arbitrary representative to its canonical element, so
    cokernels can be modelled by coset representatives.
    """

    def __init__(self, ring: Ring, elements: Sequence, add, act, *, canon=None, generators=None, render=None, name="M"):
        self.ring = ring
        self._canon = canon or (lambda x: x)
        self._elements = [self._canon(e) for e in elements]
        self._add = add
        self._act = act
        self._gens = list(generators) if generators is not None else list(self._elements)
        self._render = render or str
        self.name = name
        self._zero = self._canon(self._elements[0])

    def __repr__(self):
        return f"FiniteCarrier({self.name}, {len(self._elements)} elements)"

    finite = True

    def zero(self):
        return self._zero

    def add(self, a, b):
        return self._canon(self._add(a, b))

    def neg(self, a):
        # finite group: the unique b with a + b = 0
        for b in self._elements:
            if self.add(a, b) == self._zero:
                return b
        raise ArithmeticError("no additive inverse found")

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def act(self, s, x):
        return self._canon(self._act(s, x))

    def eq(self, a, b) -> bool:
        return self._canon(a) == self._canon(b)

    def is_zero(self, a) -> bool:
        return self._canon(a) == self._zero

    def key(self, a):
        return self._canon(a)

    def render(self, a) -> str:
        return self._render(a)

    def elements(self):
        return list(self._elements)

    def additive_generators(self):
        return list(self._gens)
