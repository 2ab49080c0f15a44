"""Exact base fields.

A field object carries the arithmetic; its elements are plain Python values:

    PrimeField(p)        ints in range(p)
    Rationals()          fractions.Fraction
    ExtensionField(K, f) tuples of K-values, coordinates in 1, x, ..., x^(d-1)

All field objects are immutable and hashable, so they can be compared when
two structures must share a base.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence


class Ring:
    """Arithmetic protocol shared by fields, finite algebras and polynomial rings."""

    characteristic: int = 0

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def from_int(self, n: int):
        return self.coerce(n)

    def coerce(self, c):
        """Embed a base constant (an int or a value of the underlying field)."""
        raise NotImplementedError

    def power(self, a, e: int):
        result = self.one()
        base = a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def render(self, a) -> str:
        return str(a)

    # finite rings override these
    order: int | None = None

    def elements(self) -> Iterator:
        raise TypeError(f"{self!r} is not finite")


class Field(Ring):
    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def prime_field(self) -> "Field":
        return self

    @property
    def degree(self) -> int | str:
        """Degree over the prime field; ``"infinite"`` never occurs for these carriers."""
        return 1


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p ** 0.5) + 1)):
            raise ValueError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    @property
    def order(self) -> int:  # type: ignore[override]
        return self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, c):
        if isinstance(c, Fraction):
            return self.div(c.numerator % self.p, c.denominator % self.p)
        return int(c) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def elements(self):
        return iter(range(self.p))

    def __repr__(self):
        return f"F{self.p}"


@dataclass(frozen=True)
class Rationals(Field):
    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, c):
        return Fraction(c)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def render(self, a) -> str:
        return str(Fraction(a))

    def __repr__(self):
        return "Q"


# univariate helpers on coefficient lists (low degree first) over a field

def _trim(field: Field, c: list) -> list:
    while c and field.is_zero(c[-1]):
        c.pop()
    return c


def _poly_divmod(field: Field, a: Sequence, b: Sequence):
    a = _trim(field, list(a))
    b = _trim(field, list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero()] * max(len(a) - len(b) + 1, 0)
    lead_inv = field.inv(b[-1])
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = field.mul(a[-1], lead_inv)
        q[shift] = c
        for i, bi in enumerate(b):
            a[i + shift] = field.sub(a[i + shift], field.mul(c, bi))
        a.pop()
        _trim(field, a)
    return q, a


def _poly_mul(field: Field, a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if field.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return _trim(field, out)


def _poly_sub(field: Field, a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [field.sub(a[i] if i < len(a) else field.zero(), b[i] if i < len(b) else field.zero()) for i in range(n)]
    return _trim(field, out)


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    from math import gcd, lcm

    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        return [d for d in range(1, n + 1) if n % d == 0]

    for num in divisors(a0):
        for den_ in divisors(an):
            for sign in (1, -1):
                r = Fraction(sign * num, den_)
                if sum(c * r ** k for k, c in enumerate(ints)) == 0 and r not in roots:
                    roots.append(r)
    return roots


@dataclass(frozen=True)
class ExtensionField(Field):
    """``base[x]/(modulus)`` for a monic modulus, coefficients low degree first."""

    base: Field
    modulus: tuple
    name: str = "x"
    asserted_irreducible: bool = False

    def __post_init__(self):
        mod = tuple(self.base.coerce(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) < 2:
            raise ValueError("modulus must have degree >= 1")
        if not self.base.eq(mod[-1], self.base.one()):
            raise ValueError("modulus must be monic")
        if self.deg <= 3:
            if self._has_root():
                raise ValueError(f"modulus {self.render_modulus()} is reducible over {self.base!r}")
        elif not self.asserted_irreducible:
            raise ValueError("irreducibility of degree > 3 moduli must be asserted by the caller")

    def _has_root(self) -> bool:
        if self.deg == 1:
            return False
        if isinstance(self.base, Rationals):
            return bool(_rational_roots(self.modulus))
        if self.base.order is None:
            raise ValueError("cannot check irreducibility over this base; pass asserted_irreducible=True")
        for r in self.base.elements():
            acc = self.base.zero()
            for c in reversed(self.modulus):
                acc = self.base.add(self.base.mul(acc, r), c)
            if self.base.is_zero(acc):
                return True
        return False

    @property
    def deg(self) -> int:
        return len(self.modulus) - 1

    @property
    def degree(self) -> int:
        return self.deg * self.base.degree

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.base.characteristic

    @property
    def order(self):  # type: ignore[override]
        return None if self.base.order is None else self.base.order ** self.deg

    @property
    def prime_field(self) -> Field:
        return self.base.prime_field

    @property
    def generator(self) -> tuple:
        return self._norm([self.base.zero(), self.base.one()])

    def _norm(self, coeffs) -> tuple:
        _, r = _poly_divmod(self.base, coeffs, self.modulus)
        r = list(r) + [self.base.zero()] * (self.deg - len(r))
        return tuple(r)

    def zero(self):
        return tuple([self.base.zero()] * self.deg)

    def one(self):
        return self.coerce(1)

    def coerce(self, c):
        if isinstance(c, tuple):
            return self._norm(list(c))
        return self._norm([self.base.coerce(c)])

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        return self._norm(_poly_mul(self.base, a, b))

    def inv(self, a):
        # extended Euclid against the modulus
        r0, r1 = list(self.modulus), _trim(self.base, list(a))
        if not r1:
            raise ZeroDivisionError("0 has no inverse")
        s0, s1 = [], [self.base.one()]
        while r1:
            q, r = _poly_divmod(self.base, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(self.base, s0, _poly_mul(self.base, q, s1))
        # r0 is a nonzero constant since the modulus is irreducible
        c = self.base.inv(r0[0])
        return self._norm([self.base.mul(c, x) for x in s0])

    def is_zero(self, a) -> bool:
        return all(self.base.is_zero(x) for x in a)

    def elements(self):
        for coeffs in itertools.product(list(self.base.elements()), repeat=self.deg):
            yield tuple(coeffs)

    def render(self, a) -> str:
        terms = []
        for k in range(self.deg - 1, -1, -1):
            c = a[k]
            if self.base.is_zero(c):
                continue
            cs = self.base.render(c)
            if " " in cs or "+" in cs:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            else:
                mono = self.name if k == 1 else f"{self.name}^{k}"
                terms.append(mono if self.base.eq(c, self.base.one()) else f"{cs}*{mono}")
        return " + ".join(terms) if terms else "0"

    def render_modulus(self) -> str:
        return " + ".join(
            f"{self.base.render(c)}*{self.name}^{k}" for k, c in reversed(list(enumerate(self.modulus)))
            if not self.base.is_zero(c)
        )

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/({self.render_modulus()})"


def ext_field(base: Field, modulus, name: str | None = None, *, asserted_irreducible: bool = False) -> ExtensionField:
    """Build ``base[x]/(modulus)``.

    ``modulus`` is a univariate MultiPoly or a coefficient list (low degree first).
    Moduli of degree <= 3 are checked for roots; higher degrees need
    ``asserted_irreducible=True`` and the assertion is kept on the field.
    """
    from .poly import MultiPoly

    if isinstance(modulus, MultiPoly):
        if len(modulus.vars) != 1:
            raise ValueError("modulus must be univariate")
        if modulus.field != base:
            raise ValueError("modulus coefficients must live in the base field")
        coeffs = modulus.univariate_coeffs()
        name = name or modulus.vars[0]
    else:
        coeffs = list(modulus)
    return ExtensionField(base, tuple(coeffs), name or "x", asserted_irreducible)
