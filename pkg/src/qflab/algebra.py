"""Finite-dimensional commutative algebras given by structure constants."""

from __future__ import annotations

import itertools
from typing import Sequence

from .exact.fields import ExtensionField, Field, Ring
from .exact.poly import MultiPoly
from .linalg import ExactMatrix, Quotient, Subspace, quotient_space, unit_vector, vec_add, vec_scale


class AlgebraError(ValueError):
    pass


def kron(field: Field, u: Sequence, v: Sequence) -> tuple:
    return tuple(field.mul(a, b) for a in u for b in v)


class FiniteDimAlgebra(Ring):
    """An algebra over ``field`` with basis ``labels``; ``table[i][j]`` is e_i * e_j.

    Elements are coordinate tuples. The algebra doubles as a ring object, so
    generic code (modules, quadratic maps, polynomial evaluation) can use it.
    """

    def __init__(self, field: Field, labels: Sequence[str], table, unit: Sequence, *, check: bool = True):
        self.field = field
        self.labels = tuple(labels)
        n = len(self.labels)
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        self.unit = tuple(unit)
        if len(self.table) != n or any(len(r) != n for r in self.table) or len(self.unit) != n:
            raise AlgebraError("structure constants must be dim x dim x dim")
        self._nz = [
            [[(k, x) for k, x in enumerate(self.table[i][j]) if not field.is_zero(x)] for j in range(n)]
            for i in range(n)
        ]
        if check:
            self.check_axioms()

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.field.characteristic

    @property
    def order(self):  # type: ignore[override]
        return None if self.field.order is None else self.field.order ** self.dim

    def __repr__(self):
        return f"FiniteDimAlgebra(dim={self.dim} over {self.field!r}: {', '.join(self.labels)})"

    # Ring protocol -----------------------------------------------------

    def basis(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def basis_vectors(self) -> list[tuple]:
        return [self.basis(i) for i in range(self.dim)]

    def zero(self):
        return (self.field.zero(),) * self.dim

    def one(self):
        return self.unit

    def coerce(self, c):
        if isinstance(c, tuple) and len(c) == self.dim and not isinstance(self.field, ExtensionField):
            return c
        return vec_scale(self.field, self.field.coerce(c), self.unit)

    def add(self, a, b):
        return vec_add(self.field, a, b)

    def sub(self, a, b):
        f = self.field
        return tuple(f.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.field.neg(x) for x in a)

    def scale(self, c, v):
        return vec_scale(self.field, c, v)

    def mul(self, u, v):
        f = self.field
        out = [f.zero()] * self.dim
        vnz = [(j, b) for j, b in enumerate(v) if not f.is_zero(b)]
        for i, a in enumerate(u):
            if f.is_zero(a):
                continue
            row = self._nz[i]
            for j, b in vnz:
                c = f.mul(a, b)
                for k, x in row[j]:
                    out[k] = f.add(out[k], f.mul(c, x))
        return tuple(out)

    def is_zero(self, a) -> bool:
        return all(self.field.is_zero(x) for x in a)

    def elements(self):
        for coords in itertools.product(list(self.field.elements()), repeat=self.dim):
            yield tuple(coords)

    def render(self, v) -> str:
        f = self.field
        parts = []
        for c, lab in zip(v, self.labels):
            if f.is_zero(c):
                continue
            cs = f.render(c)
            if lab == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(lab)
            else:
                parts.append(f"{cs}*{lab}")
        return " + ".join(parts) if parts else "0"

    # structure -----------------------------------------------------------

    def left_matrix(self, v) -> ExactMatrix:
        """Matrix of x -> v*x in the standard basis."""
        cols = [self.mul(v, self.basis(j)) for j in range(self.dim)]
        return ExactMatrix.from_columns(self.field, cols, self.dim)

    def check_axioms(self):
        n, f = self.dim, self.field
        for i in range(n):
            if self.mul(self.unit, self.basis(i)) != self.basis(i):
                raise AlgebraError(f"unit does not act as identity on {self.labels[i]}")
            for j in range(i + 1, n):
                if self.table[i][j] != self.table[j][i]:
                    raise AlgebraError(f"not commutative on ({self.labels[i]}, {self.labels[j]})")
        for i, j, k in itertools.product(range(n), repeat=3):
            left = self.mul(self.table[i][j], self.basis(k))
            right = self.mul(self.basis(i), self.table[j][k])
            if left != right:
                raise AlgebraError(f"not associative on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    # constructors ----------------------------------------------------------

    @classmethod
    def from_modulus(cls, field: Field, coeffs: Sequence, name: str = "T") -> "FiniteDimAlgebra":
        """``field[name]/(f)`` for monic f given low degree first, basis 1, T, ..., T^(d-1)."""
        coeffs = [field.coerce(c) for c in coeffs]
        d = len(coeffs) - 1
        if d < 1 or not field.eq(coeffs[-1], field.one()):
            raise AlgebraError("modulus must be monic of degree >= 1")
        # powers T^0 .. T^(2d-2) reduced
        powers = [unit_vector(field, d, k) for k in range(d)]
        for _ in range(d, 2 * d - 1):
            prev = powers[-1]
            shifted = (field.zero(),) + prev[:-1]
            top = prev[-1]
            red = tuple(field.sub(s, field.mul(top, c)) for s, c in zip(shifted, coeffs[:-1]))
            powers.append(red)
        table = [[powers[i + j] for j in range(d)] for i in range(d)]
        labels = ["1"] + [name if k == 1 else f"{name}^{k}" for k in range(1, d)]
        return cls(field, labels, table, unit_vector(field, d, 0), check=d <= 8)

    @classmethod
    def from_extension(cls, ext: ExtensionField) -> "FiniteDimAlgebra":
        return cls.from_modulus(ext.base, ext.modulus, ext.name)

    @classmethod
    def base_field(cls, field: Field) -> "FiniteDimAlgebra":
        return cls(field, ["1"], [[(field.one(),)]], (field.one(),))

    def tensor(self, other: "FiniteDimAlgebra") -> "FiniteDimAlgebra":
        if other.field != self.field:
            raise AlgebraError("tensor factors must share the base field")
        f = self.field
        pairs = list(itertools.product(range(self.dim), range(other.dim)))
        table = [
            [kron(f, self.table[i][k], other.table[j][l]) for (k, l) in pairs]
            for (i, j) in pairs
        ]
        labels = [f"{self.labels[i]}⊗{other.labels[j]}" for i, j in pairs]
        return FiniteDimAlgebra(f, labels, table, kron(f, self.unit, other.unit), check=False)

    def evaluate(self, poly: MultiPoly, values: Sequence) -> tuple:
        return poly.evaluate(values, self)


class AlgebraMorphism:
    """A base-linear map given by ``matrix`` (target.dim x source.dim), checked to be a ring map."""

    def __init__(self, source: FiniteDimAlgebra, target: FiniteDimAlgebra, matrix: ExactMatrix, *, check: bool = True):
        if matrix.shape != (target.dim, source.dim):
            raise AlgebraError(f"matrix shape {matrix.shape} does not match {target.dim} x {source.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            problem = self.find_violation()
            if problem:
                raise AlgebraError(problem)

    def __call__(self, v) -> tuple:
        return self.matrix.apply(v)

    def find_violation(self) -> str | None:
        S, T = self.source, self.target
        if self(S.unit) != T.unit:
            return "unit is not mapped to unit"
        for i in range(S.dim):
            for j in range(i, S.dim):
                lhs = self(S.table[i][j])
                rhs = T.mul(self(S.basis(i)), self(S.basis(j)))
                if lhs != rhs:
                    return f"not multiplicative on ({S.labels[i]}, {S.labels[j]})"
        return None

    def kernel(self) -> Subspace:
        from .linalg import kernel

        return kernel(self.matrix)

    def rank(self) -> int:
        return self.matrix.rank()


def quotient_algebra(alg: FiniteDimAlgebra, ideal: Subspace) -> tuple[FiniteDimAlgebra, Quotient]:
    """alg / ideal with basis the unit vectors of the echelon complement."""
    quot = quotient_space(alg.dim, ideal)
    cols = quot.columns
    table = [[quot.proj(alg.table[a][b]) for b in cols] for a in cols]
    labels = [alg.labels[c] for c in cols]
    q = FiniteDimAlgebra(alg.field, labels, table, quot.proj(alg.unit), check=False)
    return q, quot
