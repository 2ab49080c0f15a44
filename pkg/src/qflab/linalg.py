"""Dense exact linear algebra: echelon forms, subspaces, quotients, closures.

Vectors are tuples of field values. Prime fields take a numpy int64 path for
row reduction; every other field runs through the generic field protocol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exact.fields import Field, PrimeField

_NUMPY_PRIME_LIMIT = 3_000_000_000  # keeps products inside int64


@dataclass(frozen=True)
class ExactMatrix:
    field: Field
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> "ExactMatrix":
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(field, rows, ncols)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "ExactMatrix":
        return cls.from_rows(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        return cls(field, tuple(unit_vector(field, n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "ExactMatrix":
        z = field.zero()
        return cls(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.field, tuple(zip(*self.rows)) if self.rows else tuple(() for _ in range(self.ncols)), self.nrows)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def apply(self, v: Sequence) -> tuple:
        f = self.field
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for a {self.shape} matrix")
        nz = [(j, x) for j, x in enumerate(v) if not f.is_zero(x)]
        out = []
        for r in self.rows:
            acc = f.zero()
            for j, x in nz:
                if not f.is_zero(r[j]):
                    acc = f.add(acc, f.mul(r[j], x))
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        oT = other.T
        rows = []
        f = self.field
        for r in self.rows:
            row = []
            for c in oT.rows:
                acc = f.zero()
                for a, b in zip(r, c):
                    if not f.is_zero(a) and not f.is_zero(b):
                        acc = f.add(acc, f.mul(a, b))
                row.append(acc)
            rows.append(tuple(row))
        return ExactMatrix(f, tuple(rows), other.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        f = self.field
        return ExactMatrix(f, tuple(tuple(f.sub(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == ExactMatrix.identity(self.field, self.nrows)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for r in self.rows for x in r)

    def rank(self) -> int:
        return rref(self)[1]

    def render(self) -> str:
        return "\n".join("[" + ", ".join(self.field.render(x) for x in r) + "]" for r in self.rows)


def unit_vector(field: Field, n: int, i: int) -> tuple:
    z, o = field.zero(), field.one()
    return tuple(o if k == i else z for k in range(n))


def zero_vector(field: Field, n: int) -> tuple:
    return (field.zero(),) * n


def vec_add(field: Field, u: Sequence, v: Sequence) -> tuple:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: Field, u: Sequence, v: Sequence) -> tuple:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: Field, c, v: Sequence) -> tuple:
    return tuple(field.mul(c, a) for a in v)


def is_zero_vector(field: Field, v: Sequence) -> bool:
    return all(field.is_zero(a) for a in v)


# row reduction ------------------------------------------------------------


def _rref_prime(p: int, rows: list, ncols: int):
    if not rows:
        return [], []
    A = np.array(rows, dtype=np.int64) % p
    nrows = A.shape[0]
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        if col.any():
            A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return [tuple(int(x) for x in A[i]) for i in range(r)], pivots


def _rref_generic(field: Field, rows: list, ncols: int):
    A = [list(r) for r in rows]
    nrows = len(A)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if not field.is_zero(A[i][c])), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(inv, x) for x in A[r]]
        pivot_row = A[r]
        for i in range(nrows):
            if i != r and not field.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], pivot_row)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in A[:r]], pivots


def rref(m: ExactMatrix):
    """Reduced row-echelon form: (reduced matrix of nonzero rows, rank, pivot columns)."""
    f = m.field
    if isinstance(f, PrimeField) and f.p < _NUMPY_PRIME_LIMIT:
        reduced, pivots = _rref_prime(f.p, list(m.rows), m.ncols)
    else:
        reduced, pivots = _rref_generic(f, list(m.rows), m.ncols)
    return ExactMatrix(f, tuple(reduced), m.ncols), len(pivots), pivots


def rank(field: Field, vectors: Sequence[Sequence], ncols: int) -> int:
    return rref(ExactMatrix.from_rows(field, vectors, ncols))[1]


def determinant(m: ExactMatrix):
    """Determinant by elimination (generic path; used for small function-field matrices)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    f = m.field
    A = [list(r) for r in m.rows]
    n = len(A)
    det = f.one()
    for c in range(n):
        k = next((i for i in range(c, n) if not f.is_zero(A[i][c])), None)
        if k is None:
            return f.zero()
        if k != c:
            A[c], A[k] = A[k], A[c]
            det = f.neg(det)
        det = f.mul(det, A[c][c])
        inv = f.inv(A[c][c])
        for i in range(c + 1, n):
            if not f.is_zero(A[i][c]):
                factor = f.mul(A[i][c], inv)
                A[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(A[i], A[c])]
    return det


# subspaces ----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of field^ambient held by its unique reduced echelon basis."""

    field: Field
    ambient: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        if any(len(v) != ambient for v in vectors):
            raise ValueError(f"vectors must have length {ambient}")
        red, _, piv = rref(ExactMatrix(field, tuple(vectors), ambient))
        return cls(field, ambient, red.rows, tuple(piv))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls.span(field, ambient, ExactMatrix.identity(field, ambient).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> ExactMatrix:
        return ExactMatrix(self.field, self.basis, self.ambient)

    def _check(self, other: "Subspace"):
        if other.ambient != self.ambient or other.field != self.field:
            raise ValueError(f"ambient mismatch: {self.ambient} over {self.field!r} vs {other.ambient} over {other.field!r}")

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of v after eliminating the pivot coordinates (zero iff v is in the span)."""
        f = self.field
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            a = v[c]
            if not f.is_zero(a):
                v = [f.sub(x, f.mul(a, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        if isinstance(v, Subspace):
            self._check(v)
            return all(self.contains(b) for b in v.basis)
        return is_zero_vector(self.field, self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of a member v in the echelon basis."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def combination(self, coords: Sequence) -> tuple:
        f = self.field
        out = zero_vector(f, self.ambient)
        for c, b in zip(coords, self.basis):
            if not f.is_zero(c):
                out = vec_add(f, out, vec_scale(f, c, b))
        return out

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: rows (a|a) and (b|0); rows with zero left half span the intersection."""
        self._check(other)
        f, n = self.field, self.ambient
        z = zero_vector(f, n)
        rows = [a + a for a in self.basis] + [b + z for b in other.basis]
        if not rows:
            return Subspace.zero(f, n)
        red, _, _ = rref(ExactMatrix.from_rows(f, rows, 2 * n))
        meet = [r[n:] for r in red.rows if is_zero_vector(f, r[:n])]
        return Subspace.span(f, n, meet)

    def quotient_dim(self, other: "Subspace") -> int:
        """dim(self) - dim(self ∩ other)."""
        return self.dim - self.intersection(other).dim

    def complement_columns(self) -> tuple:
        return tuple(c for c in range(self.ambient) if c not in set(self.pivots))


def subspace_ops(a: Subspace, b: Subspace, op: str):
    if op == "sum":
        return a + b
    if op == "intersection":
        return a.intersection(b)
    if op == "contains":
        return a.contains(b)
    if op == "quotient-dim":
        return a.quotient_dim(b)
    raise ValueError(f"unknown subspace operation {op!r}")


def kernel(m: ExactMatrix) -> Subspace:
    """Right null space {v : m v = 0}."""
    f, n = m.field, m.ncols
    red, _, piv = rref(m)
    free = [c for c in range(n) if c not in set(piv)]
    vecs = []
    for fc in free:
        v = [f.zero()] * n
        v[fc] = f.one()
        for row, pc in zip(red.rows, piv):
            v[pc] = f.neg(row[fc])
        vecs.append(v)
    return Subspace.span(f, n, vecs)


def image(m: ExactMatrix) -> Subspace:
    return Subspace.span(m.field, m.nrows, m.T.rows)


@dataclass(frozen=True)
class Quotient:
    """field^ambient / U with explicit projection (dim x ambient) and section (ambient x dim)."""

    subspace: Subspace
    dim: int
    project: ExactMatrix
    lift: ExactMatrix
    columns: tuple  # ambient coordinates whose unit vectors lift the quotient basis

    def proj(self, v: Sequence) -> tuple:
        r = self.subspace.reduce(v)
        return tuple(r[c] for c in self.columns)

    def lift_vec(self, q: Sequence) -> tuple:
        f = self.subspace.field
        v = [f.zero()] * self.subspace.ambient
        for c, x in zip(self.columns, q):
            v[c] = x
        return tuple(v)


def quotient_space(ambient: int, u: Subspace) -> Quotient:
    if u.ambient != ambient:
        raise ValueError("subspace does not live in the given ambient space")
    f = u.field
    cols = u.complement_columns()
    proj_cols = [tuple(u.reduce(unit_vector(f, ambient, k))[c] for c in cols) for k in range(ambient)]
    project = ExactMatrix.from_columns(f, proj_cols, len(cols)) if cols else ExactMatrix(f, (), ambient)
    lift = ExactMatrix.from_columns(f, [unit_vector(f, ambient, c) for c in cols], ambient) if cols else ExactMatrix(
        f, tuple(() for _ in range(ambient)), 0
    )
    return Quotient(u, len(cols), project, lift, cols)


# closures inside algebras ---------------------------------------------------


def _closure(alg, generators: Sequence[Sequence], multipliers: Sequence[Sequence]) -> Subspace:
    f, n = alg.field, alg.dim
    current = Subspace.span(f, n, generators)
    while True:
        products = [alg.mul(m, b) for m in multipliers for b in current.basis]
        grown = Subspace.span(f, n, current.basis + tuple(products))
        if grown.dim == current.dim:
            return current
        current = grown


def mult_closure(alg, generators: Sequence[Sequence]) -> Subspace:
    """Smallest subspace containing the generators and closed under multiplication.

    Each round multiplies the generators into the current basis; at the fixed
    point every word in the generators is present, so the span is closed.
    """
    return _closure(alg, generators, [tuple(g) for g in generators])


def ideal_closure(alg, generators: Sequence[Sequence], multipliers: Sequence[Sequence] | None = None) -> Subspace:
    """Ideal generated by ``generators``; ``multipliers`` must generate alg as an algebra."""
    if multipliers is None:
        multipliers = [unit_vector(alg.field, alg.dim, i) for i in range(alg.dim)]
    return _closure(alg, generators, multipliers)


def is_closed(alg, space: Subspace) -> bool:
    return all(space.contains(alg.mul(a, b)) for a in space.basis for b in space.basis)
