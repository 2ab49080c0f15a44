"""Counting quadratic maps S^k -> S over finite algebras, plus the dimension audit.

A quadratic map over the prime field F_p is determined by its values Q_a on
an F_p-basis v_a of M and its polarisations B_ab on basis pairs a < b:

    q(sum c_a v_a) = sum c_a^2 Q_a + sum_{a<b} c_a c_b B_ab.

Square-scaling over all of S and bilinearity over R or S then become linear
conditions on (Q, B), so both counts are p^(dimension of a solution space).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .algebra import FiniteDimAlgebra
from .exact.fields import PrimeField
from .lab import q_phi
from .linalg import ExactMatrix, Subspace, kernel
from .modules import FreeModule, RegularModule
from .quadmaps import (
    GuardExceeded,
    QuadraticMapSpec,
    axiom_check,
    hom_s_basis,
    prime_scalars,
    subring_scalars,
    table_form,
)

# rows x unknowns of the largest constraint system the census will build
CENSUS_GUARD = 10_000_000


@dataclass(frozen=True)
class CensusResult:
    carrier: str
    p: int
    count_relative: int
    count_absolute: int
    dim_relative: int
    dim_absolute: int
    witnesses: tuple = ()  # rendered relative-but-not-absolute maps

    @property
    def ratio(self) -> int:
        return self.count_relative // self.count_absolute


class _System:
    """Unknown layout and linear expressions for maps S^k -> S."""

    def __init__(self, S: FiniteDimAlgebra, k: int):
        if not isinstance(S.field, PrimeField):
            raise ValueError("the census needs an algebra over a prime field")
        self.S, self.k = S, k
        self.p, self.n = S.field.p, S.dim
        self.m = k * self.n
        self.pairs = [(a, a) for a in range(self.m)] + list(itertools.combinations(range(self.m), 2))
        self.block = {pr: i for i, pr in enumerate(self.pairs)}
        self.unknowns = self.n * len(self.pairs)
        self._left = {}

    def left(self, s) -> np.ndarray:
        key = tuple(s)
        if key not in self._left:
            self._left[key] = np.array(self.S.left_matrix(s).rows, dtype=np.int64)
        return self._left[key]

    def vec(self, slot: int, s) -> np.ndarray:
        v = np.zeros(self.m, dtype=np.int64)
        v[slot * self.n:(slot + 1) * self.n] = s
        return v

    def basis_vec(self, alpha: int) -> np.ndarray:
        return self.vec(alpha // self.n, self.S.basis(alpha % self.n))

    def act(self, s, x: np.ndarray) -> np.ndarray:
        """s * x for x in F_p coordinates of S^k."""
        out = np.zeros(self.m, dtype=np.int64)
        L = self.left(s)
        for slot in range(self.k):
            sl = slice(slot * self.n, (slot + 1) * self.n)
            out[sl] = L @ x[sl] % self.p
        return out

    def _expr(self, coeff) -> np.ndarray:
        """n x unknowns matrix for sum over blocks of coeff(block) * identity."""
        e = np.zeros((self.n, self.unknowns), dtype=np.int64)
        eye = np.eye(self.n, dtype=np.int64)
        for i, (a, b) in enumerate(self.pairs):
            c = coeff(a, b) % self.p
            if c:
                e[:, i * self.n:(i + 1) * self.n] += c * eye
        return e

    def q(self, x: np.ndarray) -> np.ndarray:
        return self._expr(lambda a, b: x[a] * x[a] if a == b else x[a] * x[b])

    def pol(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self._expr(lambda a, b: 2 * x[a] * y[a] if a == b else x[a] * y[b] + x[b] * y[a])

    def unknown(self, a: int, b: int) -> np.ndarray:
        e = np.zeros((self.n, self.unknowns), dtype=np.int64)
        i = self.block[(min(a, b), max(a, b))]
        e[:, i * self.n:(i + 1) * self.n] = np.eye(self.n, dtype=np.int64)
        return e

    def scaled(self, s, expr: np.ndarray) -> np.ndarray:
        return self.left(s) @ expr % self.p

    # constraints

    def scaling_rows(self) -> list[np.ndarray]:
        S, m = self.S, self.m
        basis = S.basis_vectors()
        rows = []
        for a, sa in enumerate(basis):
            sq = S.mul(sa, sa)
            for al in range(m):
                x = self.act(sa, self.basis_vec(al))
                rows.append(self.q(x) - self.scaled(sq, self.unknown(al, al)))
            for al, be in itertools.combinations(range(m), 2):
                x, y = self.act(sa, self.basis_vec(al)), self.act(sa, self.basis_vec(be))
                rows.append(self.pol(x, y) - self.scaled(sq, self.unknown(al, be)))
        for (a, sa), (b, sb) in itertools.combinations(enumerate(basis), 2):
            two_ab = S.scale(2 % self.p, S.mul(sa, sb))
            for al in range(m):
                v = self.basis_vec(al)
                rows.append(self.pol(self.act(sa, v), self.act(sb, v)) - self.scaled(two_ab, self.unknown(al, al)))
            for al, be in itertools.combinations(range(m), 2):
                va, vb = self.basis_vec(al), self.basis_vec(be)
                lhs = self.pol(self.act(sa, va), self.act(sb, vb)) + self.pol(self.act(sa, vb), self.act(sb, va))
                rows.append(lhs - self.scaled(two_ab, self.unknown(al, be)))
        return rows

    def bilinear_rows(self, scalars) -> list[np.ndarray]:
        rows = []
        for r in scalars:
            for al in range(self.m):
                for be in range(self.m):
                    va, vb = self.basis_vec(al), self.basis_vec(be)
                    rows.append(self.pol(self.act(r, va), vb) - self.scaled(r, self.pol(va, vb)))
        return rows

    def solve(self, rows: list[np.ndarray]) -> Subspace:
        mat = np.vstack(rows) % self.p if rows else np.zeros((0, self.unknowns), dtype=np.int64)
        if mat.shape[0] * self.unknowns > CENSUS_GUARD:
            raise GuardExceeded(f"constraint system {mat.shape[0]} x {self.unknowns} exceeds the guard {CENSUS_GUARD}")
        f = self.S.field
        return kernel(ExactMatrix.from_rows(f, [tuple(int(x) for x in r) for r in mat], self.unknowns))

    def render(self, v) -> str:
        S, parts = self.S, []
        for i, (a, b) in enumerate(self.pairs):
            val = tuple(v[i * self.n:(i + 1) * self.n])
            if S.is_zero(val):
                continue
            name = f"q(v{a})" if a == b else f"pol(v{a},v{b})"
            parts.append(f"{name}={S.render(val)}")
        return ", ".join(parts) or "0"

    def as_map(self, v) -> QuadraticMapSpec:
        """The quadratic map with parameter vector v, for replay through axiom_check."""
        S, n, p = self.S, self.n, self.p
        blocks = [np.array(v[i * n:(i + 1) * n], dtype=np.int64) for i in range(len(self.pairs))]

        def fn(x):
            c = np.array([int(t) for s in x for t in s], dtype=np.int64)
            acc = np.zeros(n, dtype=np.int64)
            for (a, b), blk in zip(self.pairs, blocks):
                coef = c[a] * c[a] if a == b else c[a] * c[b]
                if coef % p:
                    acc += coef * blk
            return tuple(int(t) for t in acc % p)

        return QuadraticMapSpec("table", FreeModule(S, self.k), RegularModule(S), fn, prime_scalars(S),
                                {"parameters": self.render(v)})


def _carrier(S: FiniteDimAlgebra, k: int, r_desc: str) -> str:
    return f"S = {S.field!r}[{', '.join(S.labels)}], R = {r_desc}, M = S^{k}, N = S"


def enumerate_quads(S: FiniteDimAlgebra, k: int = 2, r_generators=(), max_witnesses: int = 3) -> CensusResult:
    """Count S/R-quadratic and S-quadratic maps S^k -> S.

    R is the subring generated over the prime field by ``r_generators``
    (the prime field itself when empty).
    """
    sysm = _System(S, k)
    R = subring_scalars(S, r_generators)
    base = sysm.scaling_rows()
    rel = sysm.solve(base + sysm.bilinear_rows(R.basis))
    ab = sysm.solve(base + sysm.bilinear_rows(S.basis_vectors()))
    if not rel.contains(ab):
        raise AssertionError("absolute solutions must be relative solutions")
    witnesses = []
    for v in rel.basis:
        if len(witnesses) >= max_witnesses:
            break
        if not ab.contains(v):
            witnesses.append(sysm.render(v))
    r_desc = "prime field" if not r_generators else "<" + ", ".join(S.render(g) for g in r_generators) + ">"
    p = sysm.p
    return CensusResult(_carrier(S, k, r_desc), p, p ** rel.dim, p ** ab.dim, rel.dim, ab.dim, tuple(witnesses))


def solution_spaces(S: FiniteDimAlgebra, k: int = 2, r_generators=()) -> tuple[_System, Subspace, Subspace]:
    """(system, relative solutions, absolute solutions) for replaying individual maps."""
    sysm = _System(S, k)
    R = subring_scalars(S, r_generators)
    base = sysm.scaling_rows()
    return sysm, sysm.solve(base + sysm.bilinear_rows(R.basis)), sysm.solve(base + sysm.bilinear_rows(S.basis_vectors()))


# oracles -------------------------------------------------------------------------


def raw_enumeration_count(S: FiniteDimAlgebra, k: int, relative: bool = True, guard: int = 100_000) -> int:
    """Count value tables M -> S with q(0) = 0 passing the axioms exhaustively."""
    M, N = FreeModule(S, k), RegularModule(S)
    elems = M.elements()
    nonzero = [e for e in elems if not M.is_zero(e)]
    vals = N.elements()
    if len(vals) ** len(nonzero) > guard:
        raise GuardExceeded(f"{len(vals)}^{len(nonzero)} raw tables exceed the guard {guard}")
    bil = "R-bilinearity" if relative else "S-bilinearity"
    count = 0
    for choice in itertools.product(vals, repeat=len(nonzero)):
        q = table_form(M, N, dict(zip(nonzero, choice)), prime_scalars(S))
        if all(axiom_check(q, a).proved for a in ("square-scaling", "biadditivity", bil)):
            count += 1
    return count


def gram_oracle(S: FiniteDimAlgebra) -> tuple[int, int]:
    """(distinct Gram forms on S^2, how many lie in the absolute solution space)."""
    sysm, _, ab = solution_spaces(S, 2)
    M = FreeModule(S, 2)
    seen = set()
    inside = 0
    elems = list(S.elements())
    basis = [tuple(int(t) for t in sysm.basis_vec(a)) for a in range(sysm.m)]
    as_pair = [(b[:S.dim], b[S.dim:]) for b in basis]
    for c11, c12, c22 in itertools.product(elems, repeat=3):
        def q(x):
            s, t = x
            return S.add(S.add(S.mul(c11, S.mul(s, s)), S.mul(c12, S.mul(s, t))), S.mul(c22, S.mul(t, t)))

        vec = []
        for a, b in sysm.pairs:
            if a == b:
                vec.extend(q(as_pair[a]))
            else:
                x, y = as_pair[a], as_pair[b]
                vec.extend(S.sub(S.sub(q(M.add(x, y)), q(x)), q(y)))
        key = tuple(vec)
        if key not in seen:
            seen.add(key)
            inside += ab.contains(key)
    return len(seen), inside


def cross_form_count(S: FiniteDimAlgebra) -> tuple[int, int]:
    """(candidate R-bilinear maps S x S -> S, those with b(ls, ls') = l^2 b(s, s') for all l, s, s').

    R is the prime field. Candidates are all coefficient tensors; the scaling
    condition is evaluated for every candidate at once.
    """
    if not isinstance(S.field, PrimeField):
        raise ValueError("cross-form enumeration needs a prime base field")
    p, n = S.field.p, S.dim
    elems = [np.array(e, dtype=np.int64) for e in S.elements()]
    L = {tuple(e): np.array(S.left_matrix(tuple(int(t) for t in e)).rows, dtype=np.int64) for e in elems}
    rows = []
    for lam in elems:
        Ll = L[tuple(lam)]
        L2 = np.array(S.left_matrix(S.mul(tuple(int(t) for t in lam), tuple(int(t) for t in lam))).rows, dtype=np.int64)
        for s in elems:
            ls = Ll @ s % p
            for t in elems:
                lt = Ll @ t % p
                # b(x, y) = sum_{a,b} x_a y_b B[a,b,:]; coefficient of B[a,b,c] in output coordinate r
                lhs = np.einsum("a,b->ab", ls, lt) % p
                rhs = np.einsum("a,b->ab", s, t) % p
                for r in range(n):
                    row = np.zeros((n, n, n), dtype=np.int64)
                    row[:, :, r] += lhs
                    row -= np.einsum("ab,c->abc", rhs, L2[r])
                    rows.append(row.reshape(-1) % p)
    A = np.unique(np.array(rows) % p, axis=0)
    cands = np.array(list(itertools.product(range(p), repeat=n ** 3)), dtype=np.int64).T
    ok = np.all((A @ cands) % p == 0, axis=0)
    return cands.shape[1], int(ok.sum())


# audit -------------------------------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    dim_relative: int
    dim_absolute: int
    dim_hom: int
    w_dim: int
    passes: bool
    details: dict = field(default_factory=dict)


def dimension_audit(S: FiniteDimAlgebra, census: CensusResult | None = None) -> AuditReport:
    """dim Quad_{S/R}(S^2, S) = dim Quad_S(S^2, S) + dim Hom_S(W, S) over the prime field."""
    c = census or enumerate_quads(S, 2)
    if c.p != S.field.p:
        raise ValueError("census and algebra disagree on the prime field")
    q = q_phi(S)
    hom = len(hom_s_basis(q))
    return AuditReport(c.dim_relative, c.dim_absolute, hom, q.w.dim, c.dim_relative == c.dim_absolute + hom,
                       {"ratio": c.ratio, "expected_ratio": c.p ** hom})


# the square-zero counterexample --------------------------------------------------------


def _exps(m, variables=None) -> tuple:
    if isinstance(m, tuple):
        return m
    if len(m.terms) != 1:
        raise ValueError(f"{m} is not a monomial")
    return next(iter(m.terms))


def monomial_ideal_membership(m, generators) -> bool:
    """Is the monomial m in the ideal generated by the given monomials?"""
    e = _exps(m)
    return any(all(a >= b for a, b in zip(e, _exps(g))) for g in generators)


@dataclass(frozen=True)
class TensorMove:
    direction: str  # "right": v moves from the left factor to the right one; "left": the reverse
    var: str


def replay_moves(start: tuple, moves, variables: tuple) -> list[tuple]:
    """Apply bilinearity moves av⊗b -> a⊗vb (and back) inside I⊗I.

    A move is legal only if the factor left behind is still non-constant,
    that is, stays in the augmentation ideal.
    """
    chain = [start]
    a, b = start
    for mv in moves:
        i = variables.index(mv.var)
        src, dst = (a, b) if mv.direction == "right" else (b, a)
        if src[i] == 0:
            raise ValueError(f"{mv.var} does not divide the factor it should leave")
        src = src[:i] + (src[i] - 1,) + src[i + 1:]
        if sum(src) == 0:
            raise ValueError(f"moving {mv.var} would leave a constant factor outside the ideal")
        dst = dst[:i] + (dst[i] + 1,) + dst[i + 1:]
        a, b = (src, dst) if mv.direction == "right" else (dst, src)
        chain.append((a, b))
    return chain


@dataclass(frozen=True)
class SquareZeroReport:
    squares_in_ideal: bool
    polys_checked: int
    xyz_excluded: bool
    fixed_point_chain: bool
    chains: tuple

    @property
    def passed(self) -> bool:
        return self.squares_in_ideal and self.xyz_excluded and self.fixed_point_chain


def squarezero_counterexample_check(max_degree: int = 2) -> SquareZeroReport:
    """Three mechanical checks behind the square-zero counterexample over Z[X, Y, Z].

    (a) f^2 mod 2 lies in (X^2, Y^2, Z^2) for every f in the augmentation ideal
        with F_2-coefficients and degree <= max_degree;
    (b) XYZ is not in (X^2, Y^2, Z^2);
    (c) XY⊗Z = X⊗YZ = Z⊗XY by replayed moves, so XY⊗Z is flip-fixed.
    """
    from .exact.poly import MultiPoly

    F2 = PrimeField(2)
    vars_ = ("X", "Y", "Z")
    squares = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
    monos = [e for d in range(1, max_degree + 1) for e in itertools.product(range(d + 1), repeat=3) if sum(e) == d]
    ok_a, count = True, 0
    for coeffs in itertools.product((0, 1), repeat=len(monos)):
        if not any(coeffs):
            continue
        f = MultiPoly(F2, vars_, {e: 1 for e, c in zip(monos, coeffs) if c})
        sq = f * f
        count += 1
        if not all(monomial_ideal_membership(e, squares) for e in sq.terms):
            ok_a = False
            break
    ok_b = not monomial_ideal_membership((1, 1, 1), squares)
    XY, Z, X, YZ = (1, 1, 0), (0, 0, 1), (1, 0, 0), (0, 1, 1)
    first = replay_moves((XY, Z), [TensorMove("right", "Y")], vars_)
    second = replay_moves((Z, XY), [TensorMove("left", "X"), TensorMove("right", "Z")], vars_)
    ok_c = first[-1] == (X, YZ) and second[-1] == (X, YZ) and second[0] == (first[0][1], first[0][0])
    return SquareZeroReport(ok_a, count, ok_b, ok_c, (tuple(first), tuple(second)))
