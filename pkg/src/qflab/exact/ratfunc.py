"""Rational functions ``K(T_1, ..., T_n)`` in canonical reduced form."""

from __future__ import annotations

from typing import Sequence

from .fields import Field
from .poly import MultiPoly, exact_div, poly_gcd


class RatFunc:
    """A reduced fraction num/den with monic denominator (graded-lex leading term)."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, *, reduced: bool = False):
        if den is None:
            den = MultiPoly.const(num.field, num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if num.is_zero():
                den = MultiPoly.const(num.field, num.vars, 1)
            else:
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = exact_div(num, g), exact_div(den, g)
                lc_inv = num.field.inv(den.leading_coeff())
                num, den = num.scale(lc_inv), den.scale(lc_inv)
        self.num = num
        self.den = den

    @property
    def field(self) -> Field:
        return self.num.field

    @property
    def vars(self) -> tuple:
        return self.num.vars

    @classmethod
    def const(cls, field: Field, variables: Sequence[str], c) -> "RatFunc":
        return cls(MultiPoly.const(field, variables, c), reduced=True)

    @classmethod
    def var(cls, field: Field, variables: Sequence[str], name: str) -> "RatFunc":
        return cls(MultiPoly.var(field, variables, name), reduced=True)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other, reduced=True)
        return RatFunc.const(self.field, self.vars, other)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, reduced=True)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self, var: str) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative(var) * d - n * d.derivative(var), d * d)

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        ns, ds = str(self.num), str(self.den)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        if len(self.den.terms) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_derivative(a: RatFunc, var: str) -> RatFunc:
    return a.derivative(var)


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


class RatFuncField(Field):
    """``K(vars)`` as a field object for generic code; elements are RatFunc."""

    def __init__(self, base: Field, variables: Sequence[str]):
        self.base = base
        self.vars = tuple(variables)

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.base.characteristic

    @property
    def degree(self) -> str:  # type: ignore[override]
        return "infinite"

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and (self.base, self.vars) == (other.base, other.vars)

    def __hash__(self):
        return hash(("RatFuncField", self.base, self.vars))

    def __repr__(self):
        return f"{self.base!r}({','.join(self.vars)})"

    def gen(self, name: str) -> RatFunc:
        return RatFunc.var(self.base, self.vars, name)

    def gens(self) -> list[RatFunc]:
        return [self.gen(v) for v in self.vars]

    def zero(self):
        return RatFunc.const(self.base, self.vars, 0)

    def one(self):
        return RatFunc.const(self.base, self.vars, 1)

    def coerce(self, c):
        if isinstance(c, RatFunc):
            return c
        if isinstance(c, MultiPoly):
            return RatFunc(c, reduced=True)
        return RatFunc.const(self.base, self.vars, c)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def render(self, a) -> str:
        return str(a)

    def derivative(self, a: RatFunc, var: str) -> RatFunc:
        return a.derivative(var)
