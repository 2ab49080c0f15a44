"""Quadratic maps: representations, polarisation, axiom checks and constructions.

Axiom checks come in three modes. ``exhaustive`` runs over a finite domain
and finite scalar set and is a proof. ``basis`` checks bilinearity on
additive generators only; it is a proof provided biadditivity holds. ``sampled``
runs over declared test vectors and can only report "no-counterexample-found".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .algebra import FiniteDimAlgebra
from .exact.fields import PrimeField, Ring
from .exact.poly import PolyRing
from .exact.ratfunc import RatFuncField
from .finite_rings import FiniteRing, presented_module
from .kaehler import Derivation
from .lab import QPhiResult
from .linalg import ExactMatrix, Subspace, kernel, mult_closure, zero_vector
from .modules import FiniteCarrier, FreeModule, RegularModule, ring_additive_generators, ring_is_finite

AXIOMS = ("square-scaling", "biadditivity", "R-bilinearity", "S-bilinearity")
MODES = ("exhaustive", "basis", "sampled")

# largest |M|^2 table the exhaustive engine will build
SAMPLED_CHECK_LIMIT = 10_000_000  # axiom instances one sampled call may evaluate
EXHAUSTIVE_TABLE_LIMIT = 4_000_000


class ModeError(ValueError):
    """The requested verification mode does not apply to this map or axiom."""


class GuardExceeded(RuntimeError):
    """A documented size bound would be exceeded; nothing was computed."""


# scalars ---------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarSet:
    """Scalars acting on a domain: a finite element list, additive generators, or samples."""

    name: str
    elements: tuple | None = None
    basis: tuple | None = None
    samples: tuple | None = None


def full_scalars(ring: Ring, samples: Sequence = ()) -> ScalarSet:
    if ring_is_finite(ring):
        gens = ring_additive_generators(ring)
        return ScalarSet("S", tuple(ring.elements()), tuple(gens) if gens is not None else None)
    return ScalarSet("S", samples=tuple(samples) or None)


def subring_scalars(S: FiniteDimAlgebra, generators: Sequence[tuple] = ()) -> ScalarSet:
    """The subring of S generated by ``generators`` over the prime field."""
    if not isinstance(S.field, PrimeField):
        raise ValueError("subrings are materialized only for algebras over a prime field")
    sub = mult_closure(S, [S.unit, *generators])
    elems = tuple(sub.combination(c) for c in itertools.product(range(S.field.p), repeat=sub.dim))
    return ScalarSet("R", elems, tuple(sub.basis))


def constant_scalars(ring: Ring, base_values: Sequence) -> ScalarSet:
    """Base constants inside ``ring``: a full list if the base is finite, samples otherwise."""
    vals = tuple(ring.coerce(c) for c in base_values)
    return ScalarSet("R", samples=vals)


def prime_scalars(S: FiniteDimAlgebra) -> ScalarSet:
    f = S.field
    if not isinstance(f, PrimeField):
        raise ValueError("prime scalars need an algebra over a prime field")
    return ScalarSet("R", tuple(S.scale(c, S.unit) for c in f.elements()), (S.unit,))


# maps --------------------------------------------------------------------------


@dataclass(eq=False)
class QuadraticMapSpec:
    variant: str
    domain: object
    target: object
    fn: Callable
    base: ScalarSet | None = None  # scalars for R-bilinearity
    data: dict = field(default_factory=dict)

    @property
    def ring(self) -> Ring:
        return self.domain.ring

    def __call__(self, x):
        return self.fn(x)

    def describe(self) -> str:
        extra = ", ".join(f"{k}={v}" for k, v in self.data.items())
        return f"{self.variant}({extra})" if extra else self.variant


def polarize(q: QuadraticMapSpec, x, y):
    """q(x+y) - q(x) - q(y)."""
    D, N = q.domain, q.target
    return N.sub(N.sub(q(D.add(x, y)), q(x)), q(y))


def coefficient_form(ring: Ring, rank: int, gram: dict, base: ScalarSet | None = None) -> QuadraticMapSpec:
    """q(x) = sum_{i<=j} c_ij x_i x_j with upper-triangular Gram coefficients."""
    for i, j in gram:
        if not (0 <= i <= j < rank):
            raise ValueError(f"Gram index {(i, j)} is not upper triangular for rank {rank}")
    coeffs = {k: ring.coerce(v) if not isinstance(v, tuple) else v for k, v in gram.items()}

    def fn(x):
        acc = ring.zero()
        for (i, j), c in coeffs.items():
            acc = ring.add(acc, ring.mul(c, ring.mul(x[i], x[j])))
        return acc

    return QuadraticMapSpec("coefficient", FreeModule(ring, rank), RegularModule(ring), fn, base,
                            {"gram": {k: ring.render(v) for k, v in coeffs.items()}})


def table_form(domain, target, values: dict, base: ScalarSet | None = None) -> QuadraticMapSpec:
    """A map on a finite domain given by its value table (missing keys mean 0)."""
    table = {domain.key(k): v for k, v in values.items()}

    def fn(x):
        return table.get(domain.key(x), target.zero())

    return QuadraticMapSpec("table", domain, target, fn, base, {"entries": len(table)})


def function_form(domain, target, fn: Callable, base: ScalarSet | None = None, label: str = "function") -> QuadraticMapSpec:
    return QuadraticMapSpec("function", domain, target, fn, base, {"label": label})


# witnesses and reports -------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    inputs: tuple  # ((name, value), ...)
    lhs: object
    rhs: object
    text: str

    def as_dict(self) -> dict:
        return {"inputs": self.text, "lhs": self._r(self.lhs), "rhs": self._r(self.rhs)}

    @staticmethod
    def _r(v):
        return v if isinstance(v, str) else str(v)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    mode: str
    verdict: str  # pass | fail | no-counterexample-found
    witness: Witness | None = None
    checked: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict != "fail"

    @property
    def proved(self) -> bool:
        return self.verdict == "pass"


def _render_scalar(ring, s) -> str:
    return ring.render(s)


def _witness(q, names_vals, lhs, rhs) -> Witness:
    D, N, R = q.domain, q.target, q.ring
    parts = []
    for name, val, kind in names_vals:
        parts.append(f"{name}={_render_scalar(R, val) if kind == 's' else D.render(val)}")
    return Witness(tuple((n, v) for n, v, _ in names_vals), N.render(lhs), N.render(rhs), ", ".join(parts))


# exhaustive engine -------------------------------------------------------------


class _Tables:
    """Index tables for a finite module: elements, addition, subtraction, scalar action."""

    def __init__(self, module):
        self.module = module
        self.elems = list(module.elements())
        k = len(self.elems)
        if k * k > EXHAUSTIVE_TABLE_LIMIT:
            raise GuardExceeded(f"exhaustive tables need {k}^2 entries, above the limit {EXHAUSTIVE_TABLE_LIMIT}")
        self.index = {module.key(e): i for i, e in enumerate(self.elems)}
        self._add = None
        self._sub = None
        self._act: dict = {}

    def idx(self, x) -> int:
        return self.index[self.module.key(x)]

    @property
    def add(self) -> np.ndarray:
        if self._add is None:
            M, E = self.module, self.elems
            self._add = np.array([[self.idx(M.add(a, b)) for b in E] for a in E], dtype=np.int64)
        return self._add

    @property
    def sub(self) -> np.ndarray:
        if self._sub is None:
            add = self.add
            k = len(self.elems)
            zero = self.idx(self.module.zero())
            neg = np.empty(k, dtype=np.int64)
            rows, cols = np.nonzero(add == zero)
            neg[rows] = cols
            self._sub = add[:, neg]
        return self._sub

    def act(self, s) -> np.ndarray:
        key = s if not isinstance(s, list) else tuple(s)
        if key not in self._act:
            M = self.module
            self._act[key] = np.array([self.idx(M.act(s, e)) for e in self.elems], dtype=np.int64)
        return self._act[key]


def _tables(module) -> _Tables:
    t = module.__dict__.get("_exhaustive_tables")
    if t is None:
        t = _Tables(module)
        module.__dict__["_exhaustive_tables"] = t
    return t


def _exhaustive(q: QuadraticMapSpec, axiom: str) -> AxiomReport:
    D, N, R = q.domain, q.target, q.ring
    if not getattr(D, "finite", False) or not getattr(N, "finite", False):
        raise ModeError("exhaustive mode needs a finite domain and a finite target")
    tD, tN = _tables(D), _tables(N)
    qv = np.array([tN.idx(q(x)) for x in tD.elems], dtype=np.int64)
    E = tD.elems

    if axiom == "square-scaling":
        scal = list(R.elements())
        for s in scal:
            lhs = qv[tD.act(s)]
            rhs = tN.act(R.mul(s, s))[qv]
            bad = np.flatnonzero(lhs != rhs)
            if bad.size:
                x = E[bad[0]]
                return AxiomReport(axiom, "exhaustive", "fail",
                                   _witness(q, [("lambda", s, "s"), ("x", x, "m")], tN.elems[lhs[bad[0]]], tN.elems[rhs[bad[0]]]),
                                   len(scal) * len(E))
        return AxiomReport(axiom, "exhaustive", "pass", None, len(scal) * len(E))

    pol = tN.sub[tN.sub[qv[tD.add], qv[:, None]], qv[None, :]]
    if axiom == "biadditivity":
        gens = D.additive_generators()
        if gens is None:
            raise ModeError("domain has no declared additive generators")
        count = 0
        for g in gens:
            gi = tD.idx(g)
            lhs = pol[tD.add[:, gi], :]
            rhs = tN.add[pol, pol[gi][None, :]]
            count += lhs.size
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                xi, zi = bad[0]
                return AxiomReport(axiom, "exhaustive", "fail",
                                   _witness(q, [("x", E[xi], "m"), ("y", g, "m"), ("z", E[zi], "m")],
                                            tN.elems[lhs[xi, zi]], tN.elems[rhs[xi, zi]]), count,
                                   "pol(x+y,z) = pol(x,z) + pol(y,z) for y in additive generators, all x, z")
        return AxiomReport(axiom, "exhaustive", "pass", None, count,
                           "pol(x+y,z) = pol(x,z) + pol(y,z) for y in additive generators, all x, z")

    scal = _scalars_for(q, axiom, "exhaustive")
    count = 0
    for s in scal:
        lhs = pol[tD.act(s), :]
        rhs = tN.act(s)[pol]
        count += lhs.size
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            xi, yi = bad[0]
            return AxiomReport(axiom, "exhaustive", "fail",
                               _witness(q, [("lambda", s, "s"), ("x", E[xi], "m"), ("y", E[yi], "m")],
                                        tN.elems[lhs[xi, yi]], tN.elems[rhs[xi, yi]]), count)
    return AxiomReport(axiom, "exhaustive", "pass", None, count)


def _scalars_for(q: QuadraticMapSpec, axiom: str, mode: str) -> list:
    if axiom == "S-bilinearity":
        sset = full_scalars(q.ring)
    else:
        if q.base is None:
            raise ModeError("R-bilinearity needs the map's base scalars")
        sset = q.base
    if mode == "exhaustive":
        if sset.elements is None:
            raise ModeError(f"exhaustive {axiom} needs a finite scalar set")
        return list(sset.elements)
    if mode == "basis":
        if sset.basis is None:
            raise ModeError(f"basis-mode {axiom} needs additive generators of the scalars")
        return list(sset.basis)
    raise AssertionError(mode)


# sampled and basis engines -----------------------------------------------------


class _Cache:
    """Interns domain and target values as ints so repeated sums and actions are computed once."""

    def __init__(self, q: QuadraticMapSpec):
        self.q = q
        self.dom: list = []
        self.dom_ids: dict = {}
        self.tgt: list = []
        self.tgt_ids: dict = {}
        self.q_of: dict = {}
        self._memo: dict = {}

    def d(self, x) -> int:
        k = self.q.domain.key(x)
        i = self.dom_ids.get(k)
        if i is None:
            i = self.dom_ids[k] = len(self.dom)
            self.dom.append(x)
        return i

    def t(self, v) -> int:
        k = self.q.target.key(v)
        i = self.tgt_ids.get(k)
        if i is None:
            i = self.tgt_ids[k] = len(self.tgt)
            self.tgt.append(v)
        return i

    def _op(self, tag, a, b, fn):
        key = (tag, a, b)
        r = self._memo.get(key)
        if r is None:
            r = self._memo[key] = fn()
        return r

    def qv(self, xi: int) -> int:
        r = self.q_of.get(xi)
        if r is None:
            r = self.q_of[xi] = self.t(self.q(self.dom[xi]))
        return r

    def dadd(self, xi, yi) -> int:
        return self._op("d+", xi, yi, lambda: self.d(self.q.domain.add(self.dom[xi], self.dom[yi])))

    def dact(self, s, xi) -> int:
        return self._op("d*", _skey(s), xi, lambda: self.d(self.q.domain.act(s, self.dom[xi])))

    def tadd(self, a, b) -> int:
        return self._op("t+", a, b, lambda: self.t(self.q.target.add(self.tgt[a], self.tgt[b])))

    def tsub(self, a, b) -> int:
        return self._op("t-", a, b, lambda: self.t(self.q.target.sub(self.tgt[a], self.tgt[b])))

    def tact(self, s, a) -> int:
        return self._op("t*", _skey(s), a, lambda: self.t(self.q.target.act(s, self.tgt[a])))

    def pol(self, xi, yi) -> int:
        return self._op("pol", xi, yi, lambda: self.tsub(self.tsub(self.qv(self.dadd(xi, yi)), self.qv(xi)), self.qv(yi)))


def _skey(s):
    return tuple(s) if isinstance(s, list) else s


def _guard_checks(n: int):
    if n > SAMPLED_CHECK_LIMIT:
        raise GuardExceeded(f"{n} sampled checks exceed the limit {SAMPLED_CHECK_LIMIT}")


def _sampled(q: QuadraticMapSpec, axiom: str, samples, scalars, generators) -> AxiomReport:
    R = q.ring
    if not samples:
        raise ModeError("sampled mode needs a declared list of test vectors")
    c = _Cache(q)
    xs = [c.d(x) for x in samples]
    count = 0
    verdict = "no-counterexample-found"
    if axiom == "square-scaling":
        scal = scalars if scalars is not None else full_scalars(R).samples
        if not scal:
            raise ModeError("sampled square-scaling needs scalars")
        _guard_checks(len(scal) * len(samples))
        for s in scal:
            ss = R.mul(s, s)
            for x, xi in zip(samples, xs):
                count += 1
                lhs, rhs = c.qv(c.dact(s, xi)), c.tact(ss, c.qv(xi))
                if lhs != rhs:
                    return AxiomReport(axiom, "sampled", "fail",
                                       _witness(q, [("lambda", s, "s"), ("x", x, "m")], c.tgt[lhs], c.tgt[rhs]), count)
        return AxiomReport(axiom, "sampled", verdict, None, count)
    if axiom == "biadditivity":
        gens = generators if generators is not None else samples
        _guard_checks(len(samples) * len(gens) * len(samples))
        gs = [c.d(y) for y in gens]
        for x, xi in zip(samples, xs):
            for y, yi in zip(gens, gs):
                xyi = c.dadd(xi, yi)
                for z, zi in zip(samples, xs):
                    count += 1
                    lhs, rhs = c.pol(xyi, zi), c.tadd(c.pol(xi, zi), c.pol(yi, zi))
                    if lhs != rhs:
                        return AxiomReport(axiom, "sampled", "fail",
                                           _witness(q, [("x", x, "m"), ("y", y, "m"), ("z", z, "m")], c.tgt[lhs], c.tgt[rhs]),
                                           count)
        return AxiomReport(axiom, "sampled", verdict, None, count)
    if scalars is None:
        sset = full_scalars(R) if axiom == "S-bilinearity" else q.base
        scalars = (sset.samples or sset.elements) if sset is not None else None
    if not scalars:
        raise ModeError(f"sampled {axiom} needs scalars")
    return _bilinear_loop(q, c, axiom, "sampled", scalars, samples, verdict, count)


def _bilinear_loop(q, c: _Cache, axiom, mode, scalars, vectors, verdict, count, note=""):
    _guard_checks(len(scalars) * len(vectors) ** 2)
    ids = [c.d(x) for x in vectors]
    for s in scalars:
        for x, xi in zip(vectors, ids):
            sxi = c.dact(s, xi)
            for y, yi in zip(vectors, ids):
                count += 1
                lhs, rhs = c.pol(sxi, yi), c.tact(s, c.pol(xi, yi))
                if lhs != rhs:
                    return AxiomReport(axiom, mode, "fail",
                                       _witness(q, [("lambda", s, "s"), ("x", x, "m"), ("y", y, "m")], c.tgt[lhs], c.tgt[rhs]),
                                       count, note)
    return AxiomReport(axiom, mode, verdict, None, count, note)


def _basis(q: QuadraticMapSpec, axiom: str) -> AxiomReport:
    if axiom not in ("R-bilinearity", "S-bilinearity"):
        raise ModeError(f"basis mode only certifies bilinearity; {axiom} needs exhaustive or sampled mode")
    gens = q.domain.additive_generators()
    if gens is None:
        raise ModeError("basis mode needs additive generators of the domain")
    scal = _scalars_for(q, axiom, "basis")
    return _bilinear_loop(q, _Cache(q), axiom, "basis", scal, gens, "pass", 0, "proof conditional on biadditivity")


def axiom_check(q: QuadraticMapSpec, axiom: str, mode: str = "exhaustive", *, samples: Sequence | None = None,
                scalars: Sequence | None = None, generators: Sequence | None = None) -> AxiomReport:
    """Check one axiom. Witnesses are the first failure in a fixed input order."""
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}; expected one of {', '.join(AXIOMS)}")
    if mode == "exhaustive":
        return _exhaustive(q, axiom)
    if mode == "basis":
        return _basis(q, axiom)
    if mode == "sampled":
        return _sampled(q, axiom, samples, scalars, generators)
    raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")


def check_all(q: QuadraticMapSpec, mode: str = "exhaustive", **kw) -> dict[str, AxiomReport]:
    return {a: axiom_check(q, a, mode, **kw) for a in AXIOMS}


# constructions -------------------------------------------------------------------


def derivation_form(d: Derivation | None, ring: Ring | None = None, base: ScalarSet | None = None) -> QuadraticMapSpec:
    """q_d(s, s') = d(s)s' - s d(s') on S^2.

    ``d`` is a derivation accepted by derivation_check, or a variable name
    for the formal partial derivative on a polynomial or rational-function
    ring (always a derivation).
    """
    if d is None:
        raise ValueError("invalid derivation: derivation_check rejected the generator images")
    if isinstance(d, str):
        if not isinstance(ring, (PolyRing, RatFuncField)):
            raise ValueError("a variable name needs a polynomial or rational-function ring")
        var = d
        S = ring
        target = RegularModule(S)
        deriv = lambda s: S.derivative(S.coerce(s), var)  # noqa: E731
        label = f"d/d{var}"
    else:
        S = d.presented.realization
        target = d.target
        deriv = d
        label = "derivation(" + ", ".join(f"{x}->{target.render(v)}" for x, v in zip(d.presented.gens, d.images)) + ")"
        if base is None and isinstance(S.field, PrimeField):
            base = prime_scalars(S)
    M = target

    def fn(x):
        s, t = x
        return M.sub(M.act(t, deriv(s)), M.act(s, deriv(t)))

    return QuadraticMapSpec("derivation", FreeModule(S, 2), target, fn, base, {"d": label})


def higher_derivative_form(ring: Ring, indices: Sequence, base: ScalarSet | None = None) -> QuadraticMapSpec:
    """q(F, G) = d^k(FG)/dT_{i1}...dT_{ik}; requires characteristic 2 and distinct indices.

    Indices are variable names or 1-based positions.
    """
    if not isinstance(ring, (PolyRing, RatFuncField)):
        raise ValueError("higher-derivative forms live on polynomial or rational-function rings")
    if ring.characteristic != 2:
        raise ValueError(f"higher-derivative forms need characteristic 2, got {ring.characteristic}")
    names = [ring.vars[i - 1] if isinstance(i, int) else i for i in indices]
    if len(set(names)) != len(names):
        raise ValueError(f"repeated index in {list(indices)}")
    for v in names:
        if v not in ring.vars:
            raise ValueError(f"unknown variable {v!r}")

    def fn(x):
        h = ring.mul(ring.coerce(x[0]), ring.coerce(x[1]))
        for v in names:
            h = ring.derivative(h, v)
        return h

    if base is None:
        base = constant_scalars(ring, [1])
    return QuadraticMapSpec("higher-derivative", FreeModule(ring, 2), RegularModule(ring), fn, base,
                            {"indices": "{" + ",".join(names) + "}"})


def evaluation_matrix(ring: Ring, n: int | None = None) -> tuple[list[tuple[str, ...]], ExactMatrix]:
    """Values of the 2^n forms q_I on the inputs (T^A, 1), A over subsets of the variables.

    Row A, column I holds q_I(T^A, 1); it is unitriangular for inclusion order.
    """
    names = list(ring.vars if n is None else ring.vars[:n])
    subsets = [c for k in range(len(names) + 1) for c in itertools.combinations(names, k)]
    forms = [higher_derivative_form(ring, list(I)) for I in subsets]
    rows = []
    for A in subsets:
        mono = ring.one()
        for v in A:
            mono = ring.mul(mono, ring.gen(v))
        rows.append([q((mono, ring.one())) for q in forms])
    field_ = ring if isinstance(ring, RatFuncField) else RatFuncField(ring.field, ring.vars)
    return subsets, ExactMatrix.from_rows(field_, [[field_.coerce(x) for x in r] for r in rows], len(subsets))


def hom_s_basis(q: QPhiResult) -> list[ExactMatrix]:
    """Base-field basis of Hom_S(W, S); each element is a dim S x dim W matrix."""
    S, f = q.S, q.S.field
    m, w = S.dim, q.w.dim
    if w == 0:
        return []
    rows = []
    for a in range(m):
        A = q.w_action_matrix(S.basis(a))
        L = S.left_matrix(S.basis(a))
        for r in range(m):
            for c in range(w):
                row = [f.zero()] * (m * w)
                for k in range(w):
                    row[r * w + k] = f.add(row[r * w + k], A.rows[k][c])
                for k in range(m):
                    row[k * w + c] = f.sub(row[k * w + c], L.rows[r][k])
                rows.append(row)
    sol = kernel(ExactMatrix.from_rows(f, rows, m * w))
    return [ExactMatrix.from_rows(f, [v[r * w:(r + 1) * w] for r in range(m)], w) for v in sol.basis]


def hom_s_elements(q: QPhiResult) -> list[ExactMatrix]:
    """All elements of Hom_S(W, S) over a prime field, zero first."""
    S, f = q.S, q.S.field
    if not isinstance(f, PrimeField):
        raise ValueError("enumeration needs a prime base field")
    basis = hom_s_basis(q)
    m, w = S.dim, q.w.dim
    out = []
    for coeffs in itertools.product(range(f.p), repeat=len(basis)):
        rows = [[0] * w for _ in range(m)]
        for c, B in zip(coeffs, basis):
            for r in range(m):
                for k in range(w):
                    rows[r][k] = (rows[r][k] + c * B.rows[r][k]) % f.p
        out.append(ExactMatrix.from_rows(f, rows, w))
    return out


def is_s_linear(q: QPhiResult, fmat: ExactMatrix) -> bool:
    S = q.S
    for a in range(S.dim):
        A = q.w_action_matrix(S.basis(a))
        L = S.left_matrix(S.basis(a))
        if (fmat @ A).rows != (L @ fmat).rows:
            return False
    return True


class QAsSModule:
    """Q with S acting through the structure map s -> [1⊗1⊗s]."""

    finite = True

    def __init__(self, q: QPhiResult):
        self.q = q
        self.ring = q.S
        self.algebra = q.algebra

    def zero(self):
        return self.algebra.zero()

    def add(self, a, b):
        return self.algebra.add(a, b)

    def sub(self, a, b):
        return self.algebra.sub(a, b)

    def neg(self, a):
        return self.algebra.neg(a)

    def act(self, s, x):
        return self.q.s_action(s, x)

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.algebra.is_zero(a)

    def key(self, a):
        return a

    def render(self, a):
        return self.algebra.render(a)

    def elements(self):
        return list(self.algebra.elements())

    def additive_generators(self):
        return self.algebra.basis_vectors()


def universal_cross_map(q: QPhiResult) -> QuadraticMapSpec:
    """(s, s') -> [s⊗s'⊗1] in Q; S/R-quadratic and zero on both axes."""
    S = q.S
    return QuadraticMapSpec("exotic-functional", FreeModule(S, 2), QAsSModule(q), lambda x: q.cross(x[0], x[1]),
                            prime_scalars(S) if isinstance(S.field, PrimeField) else None, {"functional": "universal"})


def exotic_form(q: QPhiResult, fmat: ExactMatrix | None = None) -> QuadraticMapSpec:
    """(s, s') -> f(W-component of [s⊗s'⊗1]) for f in Hom_S(W, S); f = None means 0."""
    S, f = q.S, q.S.field
    if fmat is None:
        fmat = ExactMatrix.zeros(f, S.dim, q.w.dim)
    if fmat.shape != (S.dim, q.w.dim):
        raise ValueError(f"functional has shape {fmat.shape}, expected {(S.dim, q.w.dim)}")
    if not is_s_linear(q, fmat):
        raise ValueError("functional is not S-linear on W")

    def fn(x):
        if q.w.dim == 0:
            return S.zero()
        return fmat.apply(q.w_coordinates(q.project_w(q.cross(x[0], x[1]))))

    label = "0" if fmat.is_zero() else ";".join(",".join(str(v) for v in r) for r in fmat.rows)
    return QuadraticMapSpec("exotic-functional", FreeModule(S, 2), RegularModule(S), fn,
                            prime_scalars(S) if isinstance(f, PrimeField) else None, {"f": label})


@dataclass
class SplitForm:
    q1: QuadraticMapSpec
    cross: Callable
    q2: QuadraticMapSpec
    source: QuadraticMapSpec
    left_rank: int

    def reconstruct(self, x):
        k = self.left_rank
        N = self.source.target
        m, mp = tuple(x[:k]), tuple(x[k:])
        return N.add(N.add(self.q1(m), self.cross(m, mp)), self.q2(mp))

    def check(self, samples: Sequence) -> bool:
        N = self.source.target
        return all(N.eq(self.reconstruct(x), self.source(x)) for x in samples)


def split_form(q: QuadraticMapSpec, left_rank: int = 1) -> SplitForm:
    """q on M ⊕ M' as (q on M, cross term pol((m,0),(0,m')), q on M')."""
    D = q.domain
    if not isinstance(D, FreeModule) or not 0 < left_rank < D.rank:
        raise ValueError("split_form needs a free domain split into two non-zero summands")
    R = D.ring
    zl = tuple(R.zero() for _ in range(left_rank))
    zr = tuple(R.zero() for _ in range(D.rank - left_rank))
    Ml, Mr = FreeModule(R, left_rank), FreeModule(R, D.rank - left_rank)
    q1 = QuadraticMapSpec(q.variant, Ml, q.target, lambda m: q(tuple(m) + zr), q.base, {**q.data, "part": "left"})
    q2 = QuadraticMapSpec(q.variant, Mr, q.target, lambda m: q(zl + tuple(m)), q.base, {**q.data, "part": "right"})

    def cross(m, mp):
        return polarize(q, tuple(m) + zr, zl + tuple(mp))

    return SplitForm(q1, cross, q2, q, left_rank)


# free resolutions over finite rings -----------------------------------------------


RESOLUTION_GUARD = 1_000_000


@dataclass(frozen=True)
class ResolutionResult:
    order: int  # size of ker[Quad(F0,N) -> Quad(F1⊕F0,N)]
    direct_order: int  # number of quadratic maps M -> N found directly
    agree: bool  # the two sets coincide after restriction to coset representatives
    maps: tuple  # the maps on M as sorted value tuples over M's elements


def _quad_tables(domain, target, guard: int):
    elems = domain.elements()
    zero = domain.key(domain.zero())
    others = [e for e in elems if domain.key(e) != zero]
    vals = target.elements()
    total = len(vals) ** len(others)
    if total > guard:
        raise GuardExceeded(f"{len(vals)}^{len(others)} = {total} candidate tables exceed the guard {guard}")
    for choice in itertools.product(vals, repeat=len(others)):
        yield {domain.key(e): v for e, v in zip(others, choice)}


def _is_quadratic(q: QuadraticMapSpec) -> bool:
    return all(axiom_check(q, a, "exhaustive").proved for a in ("square-scaling", "biadditivity", "S-bilinearity"))


def resolution_quad(S: FiniteRing, d1: Sequence[Sequence[int]], rank0: int, N, *, guard: int = RESOLUTION_GUARD) -> ResolutionResult:
    """Quadratic maps coker(d1) -> N through the kernel formula on F0 = S^rank0.

    ``d1`` lists the images of the F1 basis in F0 (one vector per F1 generator).
    A map on F0 descends iff q(s + d1(t)) = q(s) for all s in F0, t in F1.
    """
    F0 = presented_module(S, rank0, (), name=f"{S.name}^{rank0}")
    M = presented_module(S, rank0, d1, name="M")
    images = [tuple(r) for r in d1]
    span = set()
    for coeffs in itertools.product(list(S.elements()), repeat=len(images)):
        v = (S.zero(),) * rank0
        for c, r in zip(coeffs, images):
            v = tuple(S.add(a, S.mul(c, b)) for a, b in zip(v, r))
        span.add(v)

    kernel_maps = set()
    for table in _quad_tables(F0, N, guard):
        q = table_form(F0, N, table)
        if not _is_quadratic(q):
            continue
        if all(N.eq(q(F0.add(s, t)), q(s)) for s in F0.elements() for t in span):
            kernel_maps.add(tuple(N.key(q(m)) for m in M.elements()))
    direct = set()
    for table in _quad_tables(M, N, guard):
        q = table_form(M, N, table)
        if _is_quadratic(q):
            direct.add(tuple(N.key(q(m)) for m in M.elements()))
    return ResolutionResult(len(kernel_maps), len(direct), kernel_maps == direct, tuple(sorted(direct)))


__all__ = [
    "AXIOMS", "MODES", "AxiomReport", "GuardExceeded", "ModeError", "QAsSModule",
    "QuadraticMapSpec", "ResolutionResult", "ScalarSet", "SplitForm", "Witness", "axiom_check", "check_all",
    "coefficient_form", "constant_scalars", "derivation_form", "evaluation_matrix", "exotic_form", "full_scalars",
    "function_form", "higher_derivative_form", "hom_s_basis", "hom_s_elements", "is_s_linear", "polarize",
    "prime_scalars", "resolution_quad", "split_form", "subring_scalars", "table_form", "universal_cross_map",
]
