"""Commutative exterior algebras ``A[S_1..S_n]/(S_i^2)`` (no signs) and dual numbers.

With n = 1 this is the dual-number ring ``A[S]/(S^2)``, which encodes
first-order Taylor data: ``F(T + S) = F(T) + F'(T) S``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping

from .fields import Ring
from .ratfunc import RatFunc, RatFuncField


class ExteriorAlgebra(Ring):
    def __init__(self, coeffs: Ring, n: int, names: Iterable[str] | None = None):
        self.coeffs = coeffs
        self.n = n
        self.names = tuple(names) if names is not None else tuple(f"S{i + 1}" for i in range(n))
        if len(self.names) != n:
            raise ValueError("one name per square-zero generator")

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.coeffs.characteristic

    def __eq__(self, other):
        return isinstance(other, ExteriorAlgebra) and (self.coeffs, self.n) == (other.coeffs, other.n)

    def __hash__(self):
        return hash(("Lambda", self.coeffs, self.n))

    def __repr__(self):
        return f"{self.coeffs!r}[{','.join(self.names)}]/(squares)"

    def element(self, components: Mapping[frozenset, object]) -> "ExteriorElement":
        return ExteriorElement(self, components)

    def gen(self, i: int) -> "ExteriorElement":
        """The square-zero generator S_{i+1} (0-based index)."""
        return ExteriorElement(self, {frozenset([i]): self.coeffs.one()})

    def scalar(self, c) -> "ExteriorElement":
        return ExteriorElement(self, {frozenset(): self.coeffs.coerce(c)})

    def subsets(self) -> list[frozenset]:
        return [frozenset(c) for k in range(self.n + 1) for c in combinations(range(self.n), k)]

    # Ring protocol
    def zero(self):
        return ExteriorElement(self, {})

    def one(self):
        return self.scalar(1)

    def coerce(self, c):
        if isinstance(c, ExteriorElement):
            return c
        return self.scalar(c)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def render(self, a) -> str:
        return str(a)


class ExteriorElement:
    __slots__ = ("alg", "components")

    def __init__(self, alg: ExteriorAlgebra, components: Mapping[frozenset, object]):
        R = alg.coeffs
        self.alg = alg
        self.components = {frozenset(k): R.coerce(v) for k, v in components.items() if not R.is_zero(R.coerce(v))}

    def _coerce(self, other) -> "ExteriorElement":
        if isinstance(other, ExteriorElement):
            if other.alg != self.alg:
                raise ValueError("elements of different exterior algebras")
            return other
        return self.alg.scalar(other)

    def is_zero(self) -> bool:
        return not self.components

    def coefficient(self, subset: Iterable[int] = ()):
        return self.components.get(frozenset(subset), self.alg.coeffs.zero())

    def __add__(self, other):
        o = self._coerce(other)
        R = self.alg.coeffs
        out = dict(self.components)
        for k, v in o.components.items():
            out[k] = R.add(out[k], v) if k in out else v
        return ExteriorElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        R = self.alg.coeffs
        return ExteriorElement(self.alg, {k: R.neg(v) for k, v in self.components.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        R = self.alg.coeffs
        out: dict = {}
        for k1, v1 in self.components.items():
            for k2, v2 in o.components.items():
                if k1 & k2:
                    continue  # S_i^2 = 0
                k = k1 | k2
                c = R.mul(v1, v2)
                out[k] = R.add(out[k], c) if k in out else c
        return ExteriorElement(self.alg, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self.alg.power(self, e)

    def inverse(self) -> "ExteriorElement":
        """Inverse when the scalar part is a unit: a(1+N)^-1 = a^-1 sum (-N)^k."""
        R = self.alg.coeffs
        a = self.coefficient()
        if R.is_zero(a):
            raise ZeroDivisionError("scalar part is zero; element is nilpotent")
        a_inv = R.inv(a)
        nil = self * self.alg.scalar(a_inv) - 1
        total = self.alg.one()
        term = self.alg.one()
        for _ in range(self.alg.n):
            term = term * (-nil)
            total = total + term
        return total * self.alg.scalar(a_inv)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.alg == other.alg and self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    def __str__(self):
        if not self.components:
            return "0"
        parts = []
        R = self.alg.coeffs
        for k in sorted(self.components, key=lambda s: (len(s), sorted(s))):
            c = R.render(self.components[k])
            mono = "*".join(self.alg.names[i] for i in sorted(k))
            if not mono:
                parts.append(c)
            elif c == "1":
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ExteriorElement({self})"


def dual_numbers(field: RatFuncField | Ring) -> ExteriorAlgebra:
    return ExteriorAlgebra(field, 1, ("S",))


def dual_shift(F: RatFunc, var: str | None = None) -> tuple[RatFunc, RatFunc]:
    """(F, dF/dT): the coefficients of F(T + S) in K(T)[S]/(S^2)."""
    if var is None:
        if len(F.vars) != 1:
            raise ValueError("dual_shift needs a variable name for multivariate input")
        var = F.vars[0]
    return F, F.derivative(var)


def as_dual(F: RatFunc, var: str | None = None) -> ExteriorElement:
    value, slope = dual_shift(F, var)
    D = dual_numbers(RatFuncField(F.field, F.vars))
    return ExteriorElement(D, {frozenset(): value, frozenset([0]): slope})
