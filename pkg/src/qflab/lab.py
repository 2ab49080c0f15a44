"""Universal objects for a finite-dimensional algebra S over its base field R.

Coordinates are row-major: e_i⊗e_j sits at i*n + j in S⊗S and
e_i⊗e_j⊗e_k at (i*n + j)*n + k in (S⊗S)⊗S.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .algebra import AlgebraError, AlgebraMorphism, FiniteDimAlgebra, kron, quotient_algebra
from .exact.exterior import ExteriorAlgebra, as_dual
from .exact.fields import Field, PrimeField, Rationals
from .exact.poly import MultiPoly, PolyRing
from .exact.ratfunc import RatFunc, RatFuncField
from .linalg import (
    ExactMatrix,
    Quotient,
    Subspace,
    determinant,
    ideal_closure,
    is_closed,
    kernel,
    mult_closure,
    quotient_space,
    unit_vector,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vector,
)


class TensorSquare(NamedTuple):
    algebra: FiniteDimAlgebra
    mu: AlgebraMorphism
    ideal: Subspace  # kernel of mu


def tensor_square(S: FiniteDimAlgebra) -> TensorSquare:
    T2 = S.tensor(S)
    n = S.dim
    cols = [S.table[i][j] for i in range(n) for j in range(n)]
    mu = AlgebraMorphism(T2, S, ExactMatrix.from_columns(S.field, cols, n))
    return TensorSquare(T2, mu, mu.kernel())


def diagonal_generators(S: FiniteDimAlgebra) -> list[tuple]:
    """e_i⊗e_i and (e_i+e_j)⊗(e_i+e_j); their span is the span of all s⊗s."""
    f, n = S.field, S.dim
    gens = [kron(f, S.basis(i), S.basis(i)) for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        s = S.add(S.basis(i), S.basis(j))
        gens.append(kron(f, s, s))
    return gens


def delta_subalgebra(S: FiniteDimAlgebra, T2: FiniteDimAlgebra | None = None) -> Subspace:
    T2 = T2 or S.tensor(S)
    delta = mult_closure(T2, diagonal_generators(S))
    if not delta.contains(T2.unit) or not is_closed(T2, delta):
        raise AlgebraError("diagonal span is not a unital subalgebra")
    return delta


def flip_matrix(S: FiniteDimAlgebra) -> ExactMatrix:
    f, n = S.field, S.dim
    cols = [unit_vector(f, n * n, j * n + i) for i in range(n) for j in range(n)]
    return ExactMatrix.from_columns(f, cols, n * n)


def c2_fixed(S: FiniteDimAlgebra) -> Subspace:
    flip = flip_matrix(S)
    return kernel(flip - ExactMatrix.identity(S.field, flip.nrows))


@dataclass(frozen=True)
class FlatnessReport:
    delta_dim: int
    fixed_dim: int
    equal: bool


def flatness_comparison(S: FiniteDimAlgebra) -> FlatnessReport:
    delta, fixed = delta_subalgebra(S), c2_fixed(S)
    return FlatnessReport(delta.dim, fixed.dim, delta == fixed)


# Q_phi ------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QPhiResult:
    S: FiniteDimAlgebra
    algebra: FiniteDimAlgebra
    augmentation: AlgebraMorphism
    w: Subspace
    presentation: str
    delta: Subspace
    relations: Subspace  # balancing relations inside (S⊗S)⊗S
    quotient: Quotient

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def w_dim(self) -> int:
        return self.w.dim

    def triple(self, a, b, c) -> tuple:
        f = self.S.field
        return kron(f, kron(f, a, b), c)

    def class_of(self, triple_vec) -> tuple:
        return self.quotient.proj(triple_vec)

    def structure(self, s) -> tuple:
        """The S-algebra structure map s -> [1⊗1⊗s]."""
        one = self.S.unit
        return self.class_of(self.triple(one, one, s))

    def cross(self, s, t) -> tuple:
        """The universal cross form (s, t) -> [s⊗t⊗1]."""
        return self.class_of(self.triple(s, t, self.S.unit))

    def s_action(self, s, q) -> tuple:
        return self.algebra.mul(self.structure(s), q)

    def project_w(self, q) -> tuple:
        """Component in W along the section s -> [1⊗1⊗s]."""
        return vec_sub(self.S.field, q, self.structure(self.augmentation(q)))

    def w_coordinates(self, q) -> tuple:
        return self.w.coordinates(q)

    def w_action_matrix(self, s) -> ExactMatrix:
        """Matrix of the S-action by s on W in the echelon basis of W."""
        cols = [self.w.coordinates(self.s_action(s, b)) for b in self.w.basis]
        return ExactMatrix.from_columns(self.S.field, cols, self.w.dim)

    def symmetrized_cross_failures(self) -> list[tuple[int, int]]:
        """Basis pairs where [s⊗s'⊗1 + s'⊗s⊗1] != [1⊗1⊗2ss']."""
        S, f = self.S, self.S.field
        bad = []
        for i in range(S.dim):
            for j in range(i, S.dim):
                a, b = S.basis(i), S.basis(j)
                lhs = tuple(f.add(x, y) for x, y in zip(self.cross(a, b), self.cross(b, a)))
                rhs = self.structure(S.scale(f.coerce(2), S.mul(a, b)))
                if lhs != rhs:
                    bad.append((i, j))
        return bad


def _triple_multipliers(S: FiniteDimAlgebra) -> list[tuple]:
    f, one = S.field, S.unit
    out = []
    for i in range(S.dim):
        e = S.basis(i)
        out += [kron(f, kron(f, e, one), one), kron(f, kron(f, one, e), one), kron(f, kron(f, one, one), e)]
    return out


def q_phi(S: FiniteDimAlgebra) -> QPhiResult:
    """Q = (S⊗S)⊗_Δ S as the quotient of (S⊗S)⊗S by the Δ-balancing relations."""
    f, n = S.field, S.dim
    T2, mu, _ = tensor_square(S)
    delta = delta_subalgebra(S, T2)
    T3 = T2.tensor(S)
    rels = []
    for x in range(n * n):
        ex = T2.basis(x)
        for d in delta.basis:
            xd = T2.mul(ex, d)
            mu_d = mu(d)
            for t in range(n):
                et = S.basis(t)
                rels.append(vec_sub(f, kron(f, xd, et), kron(f, ex, S.mul(mu_d, et))))
    U = Subspace.span(f, n ** 3, rels)
    # the generators e⊗1⊗1, 1⊗e⊗1, 1⊗1⊗e generate T3, so this certifies U is an ideal
    for m in _triple_multipliers(S):
        for u in U.basis:
            if not U.contains(T3.mul(m, u)):
                raise AlgebraError("balancing relations do not form an ideal; induced product ill-defined")
    Q, quot = quotient_algebra(T3, U)
    aug_triple = [S.mul(S.mul(S.basis(i), S.basis(j)), S.basis(k)) for i in range(n) for j in range(n) for k in range(n)]
    for u in U.basis:
        acc = S.zero()
        for c, v in zip(u, aug_triple):
            if not f.is_zero(c):
                acc = S.add(acc, S.scale(c, v))
        if not S.is_zero(acc):
            raise AlgebraError("augmentation does not vanish on the balancing relations")
    aug = AlgebraMorphism(Q, S, ExactMatrix.from_columns(f, [aug_triple[c] for c in quot.columns], n))
    W = aug.kernel()
    result = QPhiResult(S, Q, aug, W, "direct", delta, U, quot)
    if Q.dim != n + W.dim:
        raise AlgebraError("augmentation is not onto S")
    return result


# alternative presentations ----------------------------------------------------


@dataclass
class ModelReport:
    name: str
    model: FiniteDimAlgebra
    to_model: ExactMatrix  # Q -> model
    from_model: ExactMatrix  # model -> Q
    checks: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.model.dim

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _matrix_from_images(f: Field, images: Sequence[Sequence], nrows: int) -> ExactMatrix:
    if not images:
        return ExactMatrix(f, tuple(() for _ in range(nrows)), 0)
    return ExactMatrix.from_columns(f, images, nrows)


def _morphism_ok(src: FiniteDimAlgebra, tgt: FiniteDimAlgebra, m: ExactMatrix) -> bool:
    try:
        AlgebraMorphism(src, tgt, m)
    except AlgebraError:
        return False
    return True


def _compare_presentations(name, q: QPhiResult, model, mquot, T2, phi_triple, psi_pair, structure_model, aug_model):
    """Shared verification: both maps well defined, inverse, ring maps, over and under S."""
    S, f, n = q.S, q.S.field, q.S.dim
    Q = q.algebra
    phi = _matrix_from_images(f, [mquot.proj(phi_triple(c)) for c in q.quotient.columns], model.dim)
    psi = _matrix_from_images(f, [q.class_of(psi_pair(c)) for c in mquot.columns], Q.dim)
    checks = {}
    checks["to-model well defined"] = all(
        mquot.subspace.contains(_apply_linear(f, phi_triple, u, T2.dim)) for u in q.relations.basis
    )
    checks["from-model well defined"] = all(
        q.relations.contains(_apply_linear(f, psi_pair, u, n ** 3)) for u in mquot.subspace.basis
    )
    checks["to-model then back is identity"] = (psi @ phi).is_identity()
    checks["from-model then back is identity"] = (phi @ psi).is_identity()
    checks["to-model is a ring map"] = _morphism_ok(Q, model, phi)
    checks["from-model is a ring map"] = _morphism_ok(model, Q, psi)
    checks["compatible with maps from S"] = all(
        phi.apply(q.structure(S.basis(t))) == structure_model(S.basis(t)) for t in range(n)
    )
    checks["compatible with maps to S"] = all(
        aug_model(phi.apply(Q.basis(c))) == q.augmentation(Q.basis(c)) for c in range(Q.dim)
    )
    return ModelReport(name, model, phi, psi, checks)


def _apply_linear(f: Field, on_basis, v, target_dim: int) -> tuple:
    """Extend a map given on standard basis indices linearly to the vector v."""
    acc = zero_vector(f, target_dim)
    for idx, c in enumerate(v):
        if not f.is_zero(c):
            acc = vec_add(f, acc, vec_scale(f, c, on_basis(idx)))
    return acc


def i_squared_model(S: FiniteDimAlgebra, q: QPhiResult | None = None) -> ModelReport:
    """(S⊗S)/I^2 with the two explicit maps, valid when 2 is invertible."""
    f, n = S.field, S.dim
    if f.characteristic == 2:
        raise ValueError("the I^2 presentation needs 2 to be invertible; characteristic 2 was given")
    q = q or q_phi(S)
    T2, mu, I = tensor_square(S)
    I2 = ideal_closure(T2, [T2.mul(a, b) for a in I.basis for b in I.basis])
    model, mquot = quotient_algebra(T2, I2)
    half = f.inv(f.coerce(2))
    e = S.basis

    def iota(s):
        return mquot.proj(tuple(f.mul(half, x) for x in T2.add(kron(f, S.unit, s), kron(f, s, S.unit))))

    def phi_triple(c):
        i, j, k = c // (n * n), (c // n) % n, c % n
        v = T2.add(kron(f, S.mul(e(i), e(k)), e(j)), kron(f, e(i), S.mul(e(j), e(k))))
        return tuple(f.mul(half, x) for x in v)

    def psi_pair(c):
        i, j = divmod(c, n)
        return q.triple(e(i), e(j), S.unit)

    def aug_model(v):
        return mu(mquot.lift_vec(v))

    report = _compare_presentations("i-squared", q, model, mquot, T2, phi_triple, psi_pair, iota, aug_model)
    report.checks["iota is a ring map"] = iota(S.unit) == model.unit and all(
        iota(S.mul(e(a), e(b))) == model.mul(iota(e(a)), iota(e(b))) for a in range(n) for b in range(n)
    )
    report.checks["ideal I^2 is contained in I"] = I.contains(I2)
    return report


def frobenius_model(S: FiniteDimAlgebra, q: QPhiResult | None = None) -> ModelReport:
    """(S⊗S)/J, J generated by s t^2 ⊗ s' - s ⊗ t^2 s'; valid when 2 = 0."""
    f, n = S.field, S.dim
    if f.characteristic != 2:
        raise ValueError(f"the relative Frobenius presentation needs 2 = 0; characteristic {f.characteristic} was given")
    q = q or q_phi(S)
    T2, mu, _ = tensor_square(S)
    e = S.basis
    gens = []
    for k in range(n):
        sq = S.mul(e(k), e(k))
        for i in range(n):
            for j in range(n):
                gens.append(vec_sub(f, kron(f, S.mul(e(i), sq), e(j)), kron(f, e(i), S.mul(sq, e(j)))))
    J = ideal_closure(T2, gens)
    model, mquot = quotient_algebra(T2, J)

    def phi_triple(c):
        i, j, k = c // (n * n), (c // n) % n, c % n
        return kron(f, e(k), S.mul(e(i), e(j)))

    def psi_pair(c):
        i, j = divmod(c, n)
        return q.triple(e(j), S.unit, e(i))

    def structure_model(s):
        return mquot.proj(kron(f, s, S.unit))

    def aug_model(v):
        return mu(mquot.lift_vec(v))

    return _compare_presentations("frobenius", q, model, mquot, T2, phi_triple, psi_pair, structure_model, aug_model)


# epimorphisms -------------------------------------------------------------------


def squares_subalgebra(S: FiniteDimAlgebra) -> Subspace:
    """Subalgebra generated over the base by all squares s^2."""
    f, n = S.field, S.dim
    gens = [S.mul(S.basis(i), S.basis(i)) for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        s = S.add(S.basis(i), S.basis(j))
        gens.append(S.mul(s, s))
    return mult_closure(S, gens + [S.unit])


def tensor_over_subalgebra(S: FiniteDimAlgebra, B: Subspace) -> Quotient:
    """S⊗_B S as a quotient of S⊗_R S by the B-balancing relations."""
    f, n = S.field, S.dim
    rels = []
    for b in B.basis:
        for i in range(n):
            for j in range(n):
                rels.append(vec_sub(f, kron(f, S.mul(S.basis(i), b), S.basis(j)), kron(f, S.basis(i), S.mul(b, S.basis(j)))))
    return quotient_space(n * n, Subspace.span(f, n * n, rels))


def epimorphism_check(S: FiniteDimAlgebra, subalgebra: Subspace | None = None) -> bool:
    """Is B -> S an epimorphism, i.e. is multiplication S⊗_B S -> S bijective?

    ``subalgebra`` defaults to the base field (the structure map R -> S).
    """
    B = subalgebra if subalgebra is not None else Subspace.span(S.field, S.dim, [S.unit])
    if not is_closed(S, B) or not B.contains(S.unit):
        raise ValueError("subalgebra must contain 1 and be closed under multiplication")
    quot = tensor_over_subalgebra(S, B)
    _, mu, _ = tensor_square(S)
    descended = _matrix_from_images(S.field, [mu(quot.lift_vec(unit_vector(S.field, quot.dim, c))) for c in range(quot.dim)], S.dim)
    return quot.dim == S.dim and descended.rank() == S.dim


# exterior-algebra models -------------------------------------------------------


@dataclass
class IdentityReport:
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def add(self, name: str, ok: bool):
        self.checks[name] = bool(ok)


class SquareBalancedTensor:
    """K[T]⊗_{K[T^2]}K[T] in n variables, free over the left factor on 1⊗T^A.

    Elements map subsets A to left coefficients (MultiPoly); u_i = 1⊗T_i
    multiplies by u_A u_B = u_{A△B} * prod_{i in A∩B} T_i^2.
    """

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.n = len(ring.vars)

    def element(self, comps):
        return {frozenset(k): v for k, v in comps.items() if not v.is_zero()}

    def left(self, p: MultiPoly):
        return self.element({frozenset(): p})

    def right_gen(self, i: int):
        return self.element({frozenset([i]): self.ring.one()})

    def add(self, a, b):
        out = dict(a)
        for k, v in b.items():
            out[k] = out[k] + v if k in out else v
        return self.element(out)

    def mul(self, a, b):
        gens = self.ring.gens()
        out: dict = {}
        for A, x in a.items():
            for B, y in b.items():
                c = x * y
                for i in A & B:
                    c = c * gens[i] ** 2
                k = A ^ B
                out[k] = out[k] + c if k in out else c
        return self.element(out)


def _sample_ratfuncs(K: RatFuncField) -> list[RatFunc]:
    T = K.gen(K.vars[0])
    one = K.one()
    return [T, T * T + one, one / T, (T + one) / (T * T + one + one + one), T ** 3 / (T + one)]


def exterior_model_check(n: int, p: int = 0) -> IdentityReport:
    """Check the generator-level identities behind the exterior-algebra models.

    p = 0 works over Q, otherwise over F_p. Characteristic 2 adds the
    square-balanced tensor identities in n variables.
    """
    if n < 1 or n > 4:
        raise ValueError("n must be between 1 and 4")
    base: Field = Rationals() if p == 0 else PrimeField(p)
    rep = IdentityReport()

    K = RatFuncField(base, ["T"])
    L = ExteriorAlgebra(K, 1, ["S"])
    T, S = L.scalar(K.gen("T")), L.gen(0)
    two = L.scalar(2)
    rep.add("(T+S)+(T-S) = 2T", (T + S) + (T - S) == two * T)
    rep.add("(T+S)(T-S) = T^2", (T + S) * (T - S) == T * T)
    rep.add("S^2 = 0", (S * S).is_zero())
    for F in _sample_ratfuncs(K):
        shifted = F.num.evaluate([T + S], L) / F.den.evaluate([T + S], L)
        rep.add(f"F(T+S) = F + F'S for F = {F}", shifted == as_dual(F))
        back = F.num.evaluate([T - S], L) / F.den.evaluate([T - S], L)
        rep.add(f"F(T-S) = F - F'S for F = {F}", back == L.scalar(F) - L.scalar(F.derivative("T")) * S)
    samples = _sample_ratfuncs(K)
    for F, G in zip(samples, samples[1:]):
        Fs = F.num.evaluate([T + S], L) / F.den.evaluate([T + S], L)
        Gs = G.num.evaluate([T - S], L) / G.den.evaluate([T - S], L)
        dF, dG = F.derivative("T"), G.derivative("T")
        rep.add(f"F(T+S)G(T-S) = FG + (F'G-FG')S for ({F}, {G})", Fs * Gs == L.scalar(F * G) + L.scalar(dF * G - F * dG) * S)
    if p > 0:
        diff = (T - S) ** p - (T + S) ** p
        rep.add(f"(T-S)^{p} - (T+S)^{p} = -2S^{p}", diff == L.scalar(-2) * S ** p)
        rep.add(f"(T-S)^{p} - (T+S)^{p} = 0", diff.is_zero())

    names = [f"T{i + 1}" for i in range(n)]
    if p != 2:
        Kn = RatFuncField(base, names)
        Ln = ExteriorAlgebra(Kn, n)
        for i in range(n):
            Ti, Si = Ln.scalar(Kn.gen(names[i])), Ln.gen(i)
            rep.add(f"(T{i + 1}+S{i + 1})+(T{i + 1}-S{i + 1}) = 2T{i + 1}", (Ti + Si) + (Ti - Si) == Ln.scalar(2) * Ti)
            rep.add(f"(T{i + 1}+S{i + 1})(T{i + 1}-S{i + 1}) = T{i + 1}^2", (Ti + Si) * (Ti - Si) == Ti * Ti)
    else:
        R = PolyRing(base, names)
        M = SquareBalancedTensor(R)
        gens = R.gens()
        sigma = [M.add(M.right_gen(i), M.left(gens[i])) for i in range(n)]
        for i in range(n):
            lhs = M.mul(M.right_gen(i), M.right_gen(i))
            rep.add(f"1⊗T{i + 1}^2 = T{i + 1}^2⊗1", lhs == M.left(gens[i] ** 2))
            rep.add(f"(1⊗T{i + 1} + T{i + 1}⊗1)^2 = 0", M.mul(sigma[i], sigma[i]) == {})
        # products of the sigma_i against the free basis 1⊗T^B: unitriangular
        subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]
        Kn = RatFuncField(base, names)
        rows = []
        for A in subsets:
            prod = M.left(R.one())
            for i in A:
                prod = M.mul(prod, sigma[i])
            rows.append([Kn.coerce(prod.get(B, R.zero())) for B in subsets])
        det = determinant(ExactMatrix.from_rows(Kn, rows, len(subsets)))
        rep.add(f"exterior basis maps to a basis (2^{n} x 2^{n} determinant 1)", det == Kn.one())
    return rep
