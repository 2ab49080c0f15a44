"""Sparse multivariate polynomials over an exact field.

Terms are stored as ``{exponent tuple: coefficient}`` with zero coefficients
dropped. Display and leading terms use graded lexicographic order with the
declared variable order (first variable largest).
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .fields import Field, Ring


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("field", "vars", "terms", "_hash")

    def __init__(self, field: Field, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.field = field
        self.vars = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise ValueError(f"exponent {exps} does not match variables {self.vars}")
            c = field.coerce(c) if not isinstance(c, tuple) else c
            if not field.is_zero(c):
                clean[exps] = c
        self.terms = clean
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def const(cls, field: Field, variables: Sequence[str], c) -> "MultiPoly":
        return cls(field, variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, field: Field, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(field, variables, {exps: field.one()})

    @classmethod
    def monomial(cls, field: Field, variables: Sequence[str], exps: Sequence[int], c=1) -> "MultiPoly":
        return cls(field, variables, {tuple(exps): c})

    def _like(self, terms: Mapping) -> "MultiPoly":
        return MultiPoly(self.field, self.vars, terms)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.field != self.field or other.vars != self.vars:
                raise ValueError("polynomials live in different rings")
            return other
        return MultiPoly.const(self.field, self.vars, other)

    # queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), self.field.zero())

    def leading_exps(self) -> tuple:
        return max(self.terms, key=_grlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_exps()]

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def univariate_coeffs(self) -> list:
        if len(self.vars) != 1:
            raise ValueError("not univariate")
        deg = self.total_degree()
        return [self.terms.get((k,), self.field.zero()) for k in range(deg + 1)]

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = f.add(out[e], c) if e in out else c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: self.field.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = f.mul(c1, c2)
                out[e] = f.add(out[e], c) if e in out else c
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "MultiPoly":
        c = self.field.coerce(c) if not isinstance(c, tuple) else c
        return self._like({e: self.field.mul(c, v) for e, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.field == other.field and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.vars, frozenset(self.terms.items())))
        return self._hash

    # calculus and evaluation --------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            raise ValueError(f"unknown variable {var!r} (have {self.vars})")
        i = self.vars.index(var)
        f = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[ne] = f.mul(f.coerce(e[i]), c)
        return self._like(out)

    def evaluate(self, values: Sequence, ring: Ring):
        """Substitute ``values`` (elements of ``ring``) for the variables."""
        acc = ring.zero()
        for e, c in self.terms.items():
            term = ring.coerce(c)
            for v, k in zip(values, e):
                if k:
                    term = ring.mul(term, ring.power(v, k))
            acc = ring.add(acc, term)
        return acc

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coeff()))

    # rendering ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.field
        parts: list[str] = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            neg = False
            cs = f.render(c)
            if cs.startswith("-") and " " not in cs:
                neg, cs = True, cs[1:]
            if " " in cs:
                cs = f"({cs})"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


# exact division and gcd ---------------------------------------------------


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divmod_poly(F: MultiPoly, G: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Division by a single polynomial under graded-lex order (unique remainder)."""
    if G.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    f = F.field
    lt = G.leading_exps()
    lc_inv = f.inv(G.leading_coeff())
    q: dict = {}
    r: dict = {}
    p = F
    while p.terms:
        e = p.leading_exps()
        c = p.terms[e]
        if _divides(lt, e):
            shift = tuple(a - b for a, b in zip(e, lt))
            coef = f.mul(c, lc_inv)
            q[shift] = f.add(q[shift], coef) if shift in q else coef
            p = p - G * MultiPoly.monomial(f, F.vars, shift, coef)
        else:
            r[e] = c
            p = p._like({k: v for k, v in p.terms.items() if k != e})
    return F._like(q), F._like(r)


def exact_div(F: MultiPoly, G: MultiPoly) -> MultiPoly:
    q, r = divmod_poly(F, G)
    if r:
        raise ArithmeticError(f"{G} does not divide {F}")
    return q


def _coeffs_in(F: MultiPoly, i: int) -> dict[int, MultiPoly]:
    """View F as a polynomial in variable i; coefficients free of that variable."""
    out: dict[int, dict] = {}
    for e, c in F.terms.items():
        k = e[i]
        out.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
    return {k: F._like(t) for k, t in out.items()}


def _lead_in(F: MultiPoly, i: int) -> MultiPoly:
    return _coeffs_in(F, i)[F.degree_in(i)]


def _content(F: MultiPoly, i: int) -> MultiPoly:
    g = None
    for c in _coeffs_in(F, i).values():
        g = c if g is None else poly_gcd(g, c)
        if g.is_constant():
            break
    return g.monic()


def _primitive(F: MultiPoly, i: int) -> MultiPoly:
    if F.is_zero():
        return F
    return exact_div(F, _content(F, i)).monic()


def _prem(A: MultiPoly, B: MultiPoly, i: int) -> MultiPoly:
    dB = B.degree_in(i)
    lcB = _lead_in(B, i)
    x = MultiPoly.var(A.field, A.vars, A.vars[i])
    R = A
    while R and R.degree_in(i) >= dB:
        s = R.degree_in(i) - dB
        R = lcB * R - _lead_in(R, i) * (x ** s) * B
    return R


def poly_gcd(F: MultiPoly, G: MultiPoly) -> MultiPoly:
    """Monic gcd by recursive content / primitive pseudo-remainder sequences."""
    if F.is_zero():
        return G.monic()
    if G.is_zero():
        return F.monic()
    if F.is_constant() or G.is_constant():
        return MultiPoly.const(F.field, F.vars, 1)
    n = len(F.vars)
    i = next(k for k in range(n) if F.degree_in(k) > 0 or G.degree_in(k) > 0)
    if F.degree_in(i) == 0:
        return poly_gcd(F, _content(G, i))
    if G.degree_in(i) == 0:
        return poly_gcd(_content(F, i), G)
    c = poly_gcd(_content(F, i), _content(G, i))
    A, B = _primitive(F, i), _primitive(G, i)
    if A.degree_in(i) < B.degree_in(i):
        A, B = B, A
    while B:
        R = _prem(A, B, i)
        A, B = B, _primitive(R, i)
    return (c * _primitive(A, i)).monic()


class PolyRing(Ring):
    """``field[vars]`` as a ring object for generic code; elements are MultiPoly."""

    def __init__(self, field: Field, variables: Sequence[str]):
        self.field = field
        self.vars = tuple(variables)

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.field.characteristic

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.field, self.vars) == (other.field, other.vars)

    def __hash__(self):
        return hash(("PolyRing", self.field, self.vars))

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.vars)}]"

    def gen(self, name: str) -> MultiPoly:
        return MultiPoly.var(self.field, self.vars, name)

    def gens(self) -> list[MultiPoly]:
        return [self.gen(v) for v in self.vars]

    def zero(self):
        return MultiPoly(self.field, self.vars)

    def one(self):
        return MultiPoly.const(self.field, self.vars, 1)

    def coerce(self, c):
        if isinstance(c, MultiPoly):
            return c
        return MultiPoly.const(self.field, self.vars, c)

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

    def derivative(self, a: MultiPoly, var: str) -> MultiPoly:
        return a.derivative(var)


def poly_derivative(F: MultiPoly, var: str) -> MultiPoly:
    return F.derivative(var)


def monomials_up_to(field: Field, variables: Sequence[str], degrees: Sequence[int]) -> list[MultiPoly]:
    """All monomials with exponent of variable k at most ``degrees[k]``, grlex ascending."""
    import itertools

    exps = sorted(itertools.product(*(range(d + 1) for d in degrees)), key=_grlex_key)
    return [MultiPoly.monomial(field, variables, e) for e in exps]
