"""Kähler differentials of presented algebras and the comparison map W -> Ω."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraError, FiniteDimAlgebra
from .exact.fields import Field
from .exact.poly import MultiPoly
from .lab import QPhiResult
from .linalg import ExactMatrix, Quotient, Subspace, quotient_space, vec_add, vec_scale, vec_sub, zero_vector
from .modules import RegularModule


class PresentedAlgebra:
    """base[x_1..x_n]/(f_1..f_m), optionally with a finite-dimensional realization.

    ``gen_images`` are the coordinates of the x_j in the realization and
    ``basis_polys[a]`` is a polynomial in the x_j whose image is basis vector a;
    together they let derivations be pushed from generators to all of S.
    """

    def __init__(
        self,
        base: Field,
        gens: Sequence[str],
        relations: Sequence[MultiPoly],
        realization: FiniteDimAlgebra | None = None,
        gen_images: Sequence[tuple] | None = None,
        basis_polys: Sequence[MultiPoly] | None = None,
    ):
        self.base = base
        self.gens = tuple(gens)
        self.relations = tuple(relations)
        self.realization = realization
        self.gen_images = tuple(gen_images) if gen_images is not None else None
        self.basis_polys = tuple(basis_polys) if basis_polys is not None else None
        for f in self.relations:
            if f.vars != self.gens:
                raise ValueError(f"relation {f} is not in the variables {self.gens}")
        if realization is not None:
            if self.gen_images is None or self.basis_polys is None:
                raise ValueError("a realization needs generator images and basis polynomials")
            for f in self.relations:
                if not realization.is_zero(self.evaluate(f)):
                    raise AlgebraError(f"relation {f} does not vanish in the realization")
            for a, P in enumerate(self.basis_polys):
                if self.evaluate(P) != realization.basis(a):
                    raise AlgebraError(f"basis polynomial {P} does not evaluate to {realization.labels[a]}")

    def __repr__(self):
        rels = ", ".join(str(f) for f in self.relations)
        return f"{self.base!r}[{', '.join(self.gens)}]/({rels})"

    def evaluate(self, poly: MultiPoly) -> tuple:
        return poly.evaluate(self.gen_images, self.realization)

    def jacobian(self) -> list[list[tuple]]:
        """Entries d f_i / d x_j evaluated in the realization."""
        return [[self.evaluate(f.derivative(x)) for x in self.gens] for f in self.relations]

    @classmethod
    def monogenic(cls, base: Field, coeffs: Sequence, name: str = "T") -> "PresentedAlgebra":
        """base[T]/(f) for monic f given low degree first."""
        S = FiniteDimAlgebra.from_modulus(base, coeffs, name)
        T = MultiPoly.var(base, [name], name)
        f = sum((T ** k * base.coerce(c) for k, c in enumerate(coeffs)), MultiPoly(base, [name]))
        return cls(base, [name], [f], S, [S.basis(1) if S.dim > 1 else S.coerce(base.neg(base.coerce(coeffs[0])))],
                   [T ** k for k in range(S.dim)])


@dataclass(frozen=True, eq=False)
class KaehlerModule:
    """Ω = S^n / (S-span of the Jacobian rows), as a base-field quotient."""

    presented: PresentedAlgebra
    relations: Subspace
    quotient: Quotient

    @property
    def algebra(self) -> FiniteDimAlgebra:
        return self.presented.realization

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def vanishes(self) -> bool:
        return self.dim == 0

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(f"d{x}" for x in self.presented.gens)

    def _split(self, v) -> list[tuple]:
        d = self.algebra.dim
        return [tuple(v[j * d:(j + 1) * d]) for j in range(len(self.presented.gens))]

    def from_components(self, comps: Sequence[tuple]) -> tuple:
        return self.quotient.proj(tuple(x for c in comps for x in c))

    def act(self, s, w) -> tuple:
        S = self.algebra
        return self.from_components([S.mul(s, c) for c in self._split(self.quotient.lift_vec(w))])

    def d(self, s) -> tuple:
        """The universal derivation S -> Ω."""
        A, S = self.presented, self.algebra
        f = S.field
        total = zero_vector(f, self.dim)
        for a, c in enumerate(s):
            if f.is_zero(c):
                continue
            P = A.basis_polys[a]
            comps = [A.evaluate(P.derivative(x)) for x in A.gens]
            total = vec_add(f, total, vec_scale(f, c, self.from_components(comps)))
        return total


def kaehler_module(A: PresentedAlgebra) -> KaehlerModule:
    S = A.realization
    if S is None:
        raise ValueError("Ω is only computed for presentations with a finite-dimensional realization")
    f, d, n = S.field, S.dim, len(A.gens)
    rows = []
    for Jrow in A.jacobian():
        for a in range(d):
            e = S.basis(a)
            rows.append(tuple(x for J in Jrow for x in S.mul(e, J)))
    U = Subspace.span(f, n * d, rows)
    return KaehlerModule(A, U, quotient_space(n * d, U))


@dataclass(frozen=True)
class DerivationCheck:
    valid: bool
    witness: MultiPoly | None  # first relation not sent to zero
    value: object = None  # its image in the target

    def __bool__(self):
        return self.valid


class Derivation:
    """A derivation S -> target determined by generator images; built by derivation_check."""

    def __init__(self, A: PresentedAlgebra, images: Sequence, target):
        self.presented = A
        self.images = tuple(images)
        self.target = target

    def __call__(self, s):
        A, S, M = self.presented, self.presented.realization, self.target
        f = S.field
        out = M.zero()
        for a, c in enumerate(s):
            if f.is_zero(c):
                continue
            P = A.basis_polys[a]
            for x, img in zip(A.gens, self.images):
                partial = A.evaluate(P.derivative(x))
                out = M.add(out, M.act(S.scale(c, partial), img))
        return out


def derivation_check(A: PresentedAlgebra, images: Sequence, target=None) -> tuple[DerivationCheck, Derivation | None]:
    """Leibniz extension of x_j -> images[j] is well defined iff every relation maps to 0."""
    if len(images) != len(A.gens):
        raise ValueError("one image per generator is required")
    M = target if target is not None else RegularModule(A.realization)
    for f, Jrow in zip(A.relations, A.jacobian()):
        value = M.zero()
        for J, img in zip(Jrow, images):
            value = M.add(value, M.act(J, img))
        if not M.is_zero(value):
            return DerivationCheck(False, f, value), None
    return DerivationCheck(True, None), Derivation(A, images, M)


@dataclass(frozen=True)
class ComparisonMap:
    matrix: ExactMatrix  # Ω coordinates <- W coordinates
    rank: int
    surjective: bool
    kernel_dim: int
    well_defined: bool


def w_to_omega(q: QPhiResult, omega: KaehlerModule) -> ComparisonMap:
    """s⊗s'⊗t -> t(d(s)s' - s d(s')) restricted to W."""
    S = q.S
    if omega.algebra is not S and (omega.algebra.table, omega.algebra.field) != (S.table, S.field):
        raise ValueError("Q and Ω must be built from the same algebra")
    f, n = S.field, S.dim
    dS = [omega.d(S.basis(i)) for i in range(n)]
    cols = []
    for i in range(n):
        for j in range(n):
            inner = vec_sub(f, omega.act(S.basis(j), dS[i]), omega.act(S.basis(i), dS[j]))
            for k in range(n):
                cols.append(omega.act(S.basis(k), inner))
    M3 = _from_cols(f, cols, omega.dim)
    well_defined = all(all(f.is_zero(x) for x in M3.apply(u)) for u in q.relations.basis)
    MQ = _from_cols(f, [cols[c] for c in q.quotient.columns], omega.dim)
    MW = _from_cols(f, [MQ.apply(b) for b in q.w.basis], omega.dim)
    r = MW.rank() if q.w.dim and omega.dim else 0
    return ComparisonMap(MW, r, r == omega.dim, q.w.dim - r, well_defined)


def _from_cols(f: Field, cols, nrows: int) -> ExactMatrix:
    if not cols:
        return ExactMatrix(f, tuple(() for _ in range(nrows)), 0)
    return ExactMatrix.from_columns(f, cols, nrows)
