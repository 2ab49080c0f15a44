"""The shipped scenario catalog. Each scenario builds its carriers and records named assertions."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from . import __version__
from .algebra import FiniteDimAlgebra
from .census import (
    cross_form_count,
    dimension_audit,
    enumerate_quads,
    gram_oracle,
    monomial_ideal_membership,
    squarezero_counterexample_check,
)
from .exact.fields import PrimeField, Rationals
from .exact.poly import PolyRing, monomials_up_to
from .exact.ratfunc import RatFuncField
from .finite_rings import presented_module, zmod
from .kaehler import PresentedAlgebra, derivation_check, kaehler_module, w_to_omega
from .lab import (
    c2_fixed,
    delta_subalgebra,
    epimorphism_check,
    exterior_model_check,
    frobenius_model,
    i_squared_model,
    q_phi,
    squares_subalgebra,
    tensor_square,
)
from .quadmaps import (
    axiom_check,
    constant_scalars,
    derivation_form,
    evaluation_matrix,
    exotic_form,
    hom_s_elements,
    higher_derivative_form,
    polarize,
    resolution_quad,
)


@dataclass
class Assertion:
    name: str
    op: str  # the module operation the assertion exercises
    expected: object
    computed: object
    tag: str  # DERIVED | PAPER | TRIVIAL
    witness: str | None = None

    @property
    def verdict(self) -> str:
        return "pass" if self.expected == self.computed else "fail"

    def as_dict(self) -> dict:
        d = {"name": self.name, "op": self.op, "expected": self.expected, "computed": self.computed,
             "verdict": self.verdict, "tag": self.tag}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    scenario: str
    assertions: list[Assertion]
    elapsed_ms: int = 0
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(a.verdict == "pass" for a in self.assertions)

    def as_dict(self, timing: bool = True) -> dict:
        d = {"scenario": self.scenario, "version": self.version, "assertions": [a.as_dict() for a in self.assertions]}
        if timing:
            d["elapsed-ms"] = self.elapsed_ms
        return d


class _Recorder:
    def __init__(self):
        self.items: list[Assertion] = []

    def __call__(self, name, op, expected, computed, tag="DERIVED", witness=None):
        self.items.append(Assertion(name, op, expected, computed, tag, witness))


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    builder: Callable[[_Recorder, dict], None]
    params: dict = field(default_factory=dict)  # defaults; also the set of accepted keys


class ConfigError(ValueError):
    pass


# carriers ---------------------------------------------------------------------------

Q, F2, F3 = Rationals(), PrimeField(2), PrimeField(3)


def gaussian_rationals():
    return PresentedAlgebra.monogenic(Q, [1, 0, 1], "i")


def f4():
    return PresentedAlgebra.monogenic(F2, [1, 1, 1], "x")


def f8():
    return PresentedAlgebra.monogenic(F2, [1, 1, 0, 1], "x")


def f9():
    return PresentedAlgebra.monogenic(F3, [1, 0, 1], "x")


def dual_numbers_char0():
    return PresentedAlgebra.monogenic(Q, [0, 0, 0, 1], "T")


def truncated_char2():
    return PresentedAlgebra.monogenic(F2, [0, 0, 0, 0, 1], "T")


# shared blocks ------------------------------------------------------------------------


def _universal_block(rec: _Recorder, A: PresentedAlgebra, w_dim: int, q_dim: int):
    S = A.realization
    q = q_phi(S)
    rec("dim Q", "algebra_lab.q_phi", q_dim, q.dim)
    rec("dim W", "algebra_lab.q_phi", w_dim, q.w_dim)
    rec("dim Q = dim S + dim W", "algebra_lab.q_phi", True, q.dim == S.dim + q.w_dim)
    rec("augmentation restricted to S is the identity", "algebra_lab.q_phi", True,
        all(q.augmentation(q.structure(S.basis(i))) == S.basis(i) for i in range(S.dim)))
    fails = q.symmetrized_cross_failures()
    rec("class(s⊗s'⊗1 + s'⊗s⊗1) = class(1⊗1⊗2ss') on basis pairs", "algebra_lab.q_phi", True, not fails,
        "PAPER", witness=str(fails) if fails else None)
    return q


def _model_block(rec: _Recorder, S: FiniteDimAlgebra, q, model_dim: int):
    if S.field.characteristic == 2:
        m, op = frobenius_model(S, q), "algebra_lab.frobenius_model"
    else:
        m, op = i_squared_model(S, q), "algebra_lab.i_squared_model"
    rec(f"{m.name} model dim", op, model_dim, m.dim)
    failed = [k for k, v in m.checks.items() if not v]
    rec(f"{m.name} maps are inverse ring isomorphisms over and under S", op, True, m.passed, "PAPER",
        witness=", ".join(failed) if failed else None)


def _kaehler_block(rec: _Recorder, A: PresentedAlgebra, q, omega_dim: int, bijective: bool | None):
    om = kaehler_module(A)
    rec("dim Ω", "kaehler.kaehler_module", omega_dim, om.dim)
    cmp_ = w_to_omega(q, om)
    rec("W -> Ω well defined", "kaehler.w_to_omega", True, cmp_.well_defined)
    rec("W -> Ω surjective", "kaehler.w_to_omega", True, cmp_.surjective, "PAPER")
    if bijective is not None:
        rec("W -> Ω kernel dim", "kaehler.w_to_omega", 0 if bijective else cmp_.kernel_dim, cmp_.kernel_dim)
    rec("Ω = 0 iff W = 0", "kaehler.kaehler_module", True, (om.dim == 0) == (q.w_dim == 0))


def _flat_block(rec: _Recorder, S: FiniteDimAlgebra, delta_dim: int):
    T2, _, I = tensor_square(S)
    d, c = delta_subalgebra(S, T2), c2_fixed(S)
    rec("dim Δ", "algebra_lab.delta_subalgebra", delta_dim, d.dim)
    rec("Δ = C2-fixed subspace", "algebra_lab.flatness_comparison", True, d == c)
    return I


# scenarios ----------------------------------------------------------------------------


def _gaussian(rec, params):
    A = gaussian_rationals()
    S = A.realization
    I = _flat_block(rec, S, 3)
    rec("dim I (kernel of multiplication)", "algebra_lab.tensor_square", 2, I.dim)
    q = _universal_block(rec, A, 0, 2)
    _model_block(rec, S, q, 2)
    _kaehler_block(rec, A, q, 0, True)
    rec("Q -> Q(i) is an epimorphism", "algebra_lab.epimorphism_check", False, epimorphism_check(S))


def _finite_field(A: PresentedAlgebra, q_dim: int, census_count: int | None, oracle: bool):
    def build(rec, params):
        S = A.realization
        _flat_block(rec, S, S.dim * (S.dim + 1) // 2)
        q = _universal_block(rec, A, 0, q_dim)
        _model_block(rec, S, q, q_dim)
        _kaehler_block(rec, A, q, 0, True)
        rec("prime field -> S is an epimorphism", "algebra_lab.epimorphism_check", False, epimorphism_check(S))
        rec("squares -> S is an epimorphism", "algebra_lab.epimorphism_check", True,
            epimorphism_check(S, squares_subalgebra(S)))
        if census_count is not None:
            c = enumerate_quads(S, 2)
            rec("count relative (M = S^2, N = S)", "census.enumerate_quads", census_count, c.count_relative)
            rec("count absolute (M = S^2, N = S)", "census.enumerate_quads", census_count, c.count_absolute)
            audit = dimension_audit(S, c)
            rec("dimension audit", "census.dimension_audit", True, audit.passes)
            if oracle:
                distinct, inside = gram_oracle(S)
                rec("Gram forms distinct and admissible", "census.enumerate_quads", census_count, min(distinct, inside))
                cands, cross = cross_form_count(S)
                rec("cross forms: candidates", "census.enumerate_quads", S.field.p ** (S.dim ** 3), cands)
                rec("split count |S| * |S| * cross forms", "quad_maps.split_form", census_count,
                    S.field.p ** S.dim * S.field.p ** S.dim * cross)
    return build


def _dual_char0(rec, params):
    A = dual_numbers_char0()
    S = A.realization
    _flat_block(rec, S, 6)
    q = _universal_block(rec, A, 2, 5)
    _model_block(rec, S, q, 5)
    _kaehler_block(rec, A, q, 2, True)
    chk, _ = derivation_check(A, [S.one()])
    rec("T -> 1 is a derivation", "kaehler.derivation_check", False, chk.valid, witness=str(chk.witness))
    chk2, _ = derivation_check(A, [S.basis(1)])
    rec("T -> T is a derivation", "kaehler.derivation_check", True, chk2.valid)


def _truncated_char2(rec, params):
    A = truncated_char2()
    S = A.realization
    _flat_block(rec, S, 10)
    q = _universal_block(rec, A, 4, 8)
    _model_block(rec, S, q, 8)
    _kaehler_block(rec, A, q, 4, None)
    cmp_ = w_to_omega(q, kaehler_module(A))
    rec("W -> Ω kernel dim (recorded)", "kaehler.w_to_omega", 0, cmp_.kernel_dim)
    rec("squares -> S is an epimorphism", "algebra_lab.epimorphism_check", False,
        epimorphism_check(S, squares_subalgebra(S)))
    chk, D = derivation_check(A, [S.one()])
    rec("d/dT is a derivation", "kaehler.derivation_check", True, chk.valid)
    c = enumerate_quads(S, 2)
    rec("count relative (M = S^2, N = S)", "census.enumerate_quads", 2 ** 16, c.count_relative)
    rec("count absolute (M = S^2, N = S)", "census.enumerate_quads", 2 ** 12, c.count_absolute,
        witness=c.witnesses[0] if c.witnesses else None)
    audit = dimension_audit(S, c)
    rec("relative/absolute = 2^dim Hom_S(W,S)", "census.dimension_audit", 2 ** audit.dim_hom, c.ratio)
    homs = hom_s_elements(q)
    rec("|Hom_S(W,S)|", "quad_maps.hom_s_basis", 16, len(homs))
    ex = exotic_form(q, homs[1])
    rep = axiom_check(ex, "S-bilinearity")
    rec("exotic form is S-bilinear", "quad_maps.exotic_form", False, rep.proved,
        witness=f"{rep.witness.text}: {rep.witness.lhs} != {rep.witness.rhs}" if rep.witness else None)
    rec("exotic form passes R-bilinearity (exhaustive)", "quad_maps.axiom_check", "pass",
        axiom_check(ex, "R-bilinearity").verdict)
    qd = derivation_form(D)
    rep_d = axiom_check(qd, "S-bilinearity")
    rec("q_d for d/dT is S-bilinear", "quad_maps.derivation_form", False, rep_d.proved,
        witness=rep_d.witness.text if rep_d.witness else None)


def _function_field(rec, params):
    for p in params["primes"]:
        base = Q if p == 0 else PrimeField(p)
        K = RatFuncField(base, ["T"])
        T, one, zero = K.gen("T"), K.one(), K.zero()
        label = "Q(T)" if p == 0 else f"F{p}(T)"
        consts = [1, 2, -1] if p == 0 else list(range(1, p))
        q = derivation_form("T", K, constant_scalars(K, consts))
        samples = [(one, zero), (zero, one), (T, zero), (zero, T), (T, one), (one / T, T * T + one)]
        rec(f"{label}: pol((T,0),(0,1))", "quad_maps.polarize", "1", str(polarize(q, (T, zero), (zero, one))), "PAPER")
        rec(f"{label}: T*pol((1,0),(0,1))", "quad_maps.polarize", "0", str(T * polarize(q, (one, zero), (zero, one))), "PAPER")
        s_rep = axiom_check(q, "S-bilinearity", "sampled", samples=samples, scalars=[T, T + one, one / T])
        rec(f"{label}: S-bilinearity", "quad_maps.axiom_check", "fail", s_rep.verdict, "PAPER",
            witness=f"{s_rep.witness.text}: {s_rep.witness.lhs} != {s_rep.witness.rhs}" if s_rep.witness else None)
        rec(f"{label}: S-bilinearity witness", "quad_maps.axiom_check", "lambda=T, x=(1, 0), y=(0, 1)",
            s_rep.witness.text if s_rep.witness else None, "PAPER")
        r_rep = axiom_check(q, "R-bilinearity", "sampled", samples=samples)
        rec(f"{label}: R-bilinearity", "quad_maps.axiom_check", "no-counterexample-found", r_rep.verdict)
        sc = axiom_check(q, "square-scaling", "sampled", samples=samples, scalars=[T, T + one, one / T])
        rec(f"{label}: square-scaling", "quad_maps.axiom_check", "no-counterexample-found", sc.verdict)


def bounded_degree_polys(R: PolyRing, degree: int) -> tuple[list, list]:
    """All F_2-combinations of monomials with each exponent <= degree (an additive group), and the monomials."""
    monos = monomials_up_to(R.field, R.vars, [degree] * len(R.vars))
    out = []
    for coeffs in itertools.product((0, 1), repeat=len(monos)):
        p = R.zero()
        for c, m in zip(coeffs, monos):
            if c:
                p = p + m
        out.append(p)
    return out, monos


def _two_variable(rec, params):
    R = PolyRing(F2, ["X", "Y"])
    X, Y = R.gens()
    zero = R.zero()
    q = higher_derivative_form(R, [1, 2])
    rec("q_{1,2}(X, Y)", "quad_maps.higher_derivative_form", "1", str(q((X, Y))))
    s = X + R.one()
    rec("q_{1,2}(sX, sY) = s^2 q_{1,2}(X, Y) for s = X+1", "quad_maps.higher_derivative_form", True,
        q((s * X, s * Y)) == s * s * q((X, Y)))
    polys, monos = bounded_degree_polys(R, params["degree"])
    samples = [(F, G) for F in polys for G in polys]
    gens = [(m, zero) for m in monos] + [(zero, m) for m in monos]
    sc = axiom_check(q, "square-scaling", "sampled", samples=samples, scalars=polys)
    rec("q_{1,2} square-scaling on the bounded-degree group", "quad_maps.axiom_check", "no-counterexample-found", sc.verdict)
    ba = axiom_check(q, "biadditivity", "sampled", samples=samples, generators=gens)
    rec("q_{1,2} biadditivity on the bounded-degree group", "quad_maps.axiom_check", "no-counterexample-found", ba.verdict)
    sb = axiom_check(q, "S-bilinearity", "sampled", samples=[(X, zero), (zero, Y)], scalars=[X])
    rec("q_{1,2} S-bilinearity", "quad_maps.axiom_check", "fail", sb.verdict,
        witness=f"{sb.witness.text}: {sb.witness.lhs} != {sb.witness.rhs}" if sb.witness else None)
    k0 = higher_derivative_form(R, [])
    rec("q_{} is S-bilinear on the sample", "quad_maps.axiom_check", "no-counterexample-found",
        axiom_check(k0, "S-bilinearity", "sampled", samples=[(X, zero), (zero, Y), (X, Y)], scalars=[X, Y, s]).verdict)
    for n in params["n"]:
        K = RatFuncField(F2, [f"T{i + 1}" for i in range(n)])
        subsets, m = evaluation_matrix(K)
        rec(f"n = {n}: rank of the q_I evaluation matrix", "quad_maps.higher_derivative_form", 2 ** n, m.rank())
        rec(f"n = {n}: exotic forms after removing k = 0", "quad_maps.higher_derivative_form", 2 ** n - 1,
            m.rank() - 1, "PAPER")
        rep = exterior_model_check(n, 2)
        failed = [k for k, v in rep.checks.items() if not v]
        rec(f"n = {n}: square-balanced tensor identities", "algebra_lab.exterior_model_check", True, rep.passed,
            witness=", ".join(failed) if failed else None)


def _inseparable(rec, params):
    for p in params["primes"]:
        rep = exterior_model_check(1, p)
        failed = [k for k, v in rep.checks.items() if not v]
        rec(f"p = {p}: (T-S)^{p} - (T+S)^{p} = 0", "algebra_lab.exterior_model_check", True,
            rep.checks.get(f"(T-S)^{p} - (T+S)^{p} = 0"), "PAPER")
        rec(f"p = {p}: all model identities", "algebra_lab.exterior_model_check", True, rep.passed,
            witness=", ".join(failed) if failed else None)
    rep0 = exterior_model_check(1, 0)
    rec("char 0: (T+S)(T-S) = T^2", "algebra_lab.exterior_model_check", True, rep0.checks["(T+S)(T-S) = T^2"], "TRIVIAL")
    rec("char 0: all model identities", "algebra_lab.exterior_model_check", True, rep0.passed)


def _flatfixed(rec, params):
    for label, A in [("F4/F2", f4()), ("Q(i)/Q", gaussian_rationals()), ("F2[T]/T^4", truncated_char2())]:
        S = A.realization
        d, c = delta_subalgebra(S), c2_fixed(S)
        rec(f"{label}: Δ = C2-fixed subspace", "algebra_lab.flatness_comparison", True, d == c)
        rec(f"{label}: dim Δ", "algebra_lab.delta_subalgebra", S.dim * (S.dim + 1) // 2, d.dim)
    rep = squarezero_counterexample_check(params["max_degree"])
    rec("f^2 mod 2 in (X^2,Y^2,Z^2) for bounded-degree f", "census.squarezero_counterexample_check", True,
        rep.squares_in_ideal, witness=f"{rep.polys_checked} polynomials")
    rec("XYZ in (X^2,Y^2,Z^2)", "census.monomial_ideal_membership", False, not rep.xyz_excluded, "PAPER")
    rec("X^2Y in (X^2,Y^2,Z^2)", "census.monomial_ideal_membership", True,
        monomial_ideal_membership((2, 1, 0), [(2, 0, 0), (0, 2, 0), (0, 0, 2)]), "TRIVIAL")
    rec("XY⊗Z = X⊗YZ = Z⊗XY by replayed moves", "census.squarezero_counterexample_check", True, rep.fixed_point_chain)
    Z4 = zmod(4)
    res = resolution_quad(Z4, [[2]], 1, presented_module(Z4, 1))
    rec("Z/4: quadratic maps Z/2 -> Z/4 via the resolution", "quad_maps.resolution_quad", 4, res.order)
    rec("Z/4: resolution agrees with direct enumeration", "quad_maps.resolution_quad", True, res.agree)


CATALOG: dict[str, Scenario] = {
    s.name: s
    for s in [
        Scenario("gaussian-rationals", "Q(i)/Q: W = 0 and the I^2 presentation", _gaussian),
        Scenario("f4-over-f2", "F4/F2: W = 0, census 64 = 64",
                 _finite_field(f4(), 2, 64, True)),
        Scenario("f9-over-f3", "F9/F3: W = 0, census 729 = 729 with oracles",
                 _finite_field(f9(), 2, 729, True)),
        Scenario("f8-over-f2", "F8/F2: perfect field, W = 0", _finite_field(f8(), 3, None, False)),
        Scenario("dual-numbers-char0", "Q[T]/T^3: dim W = dim Ω = 2", _dual_char0),
        Scenario("truncated-poly-char2", "F2[T]/T^4: dim W = 4 and exotic forms", _truncated_char2),
        Scenario("function-field-witness", "F'G - FG' over Q(T) and F3(T)", _function_field, {"primes": [0, 3]}),
        Scenario("two-variable-char2", "higher-derivative forms q_I in characteristic 2", _two_variable,
                 {"n": [2, 3], "degree": 1}),
        Scenario("inseparable-model", "K(T)/K(T^p) model relations", _inseparable, {"primes": [2, 3]}),
        Scenario("flatfixed-counterexample", "Δ versus C2-fixed points and the square-zero counterexample",
                 _flatfixed, {"max_degree": 2}),
    ]
}


def list_scenarios() -> list[tuple[str, str]]:
    return [(n, CATALOG[n].description) for n in sorted(CATALOG)]


def run_scenario(name: str, params: dict | None = None) -> Report:
    if name not in CATALOG:
        raise ConfigError(f"unknown scenario {name!r}; run 'qflab list' for the catalog")
    sc = CATALOG[name]
    given = dict(params or {})
    unknown = set(given) - set(sc.params)
    if unknown:
        raise ConfigError(f"scenario {name!r} does not accept params {sorted(unknown)}; accepted: {sorted(sc.params)}")
    merged = {**sc.params, **given}
    rec = _Recorder()
    t0 = time.perf_counter()
    sc.builder(rec, merged)
    return Report(name, rec.items, int((time.perf_counter() - t0) * 1000))
