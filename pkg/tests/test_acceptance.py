"""The eleven acceptance criteria, at exact equality.

Each test carries a `criterion` mark; tests/conftest.py prints one PASS/FAIL
line per criterion at the end of the run.  Run alone with
`python3 tests/test_acceptance.py` or `pytest tests/test_acceptance.py`.
"""

import sys
import time

import pytest

from qflab.algebra import FiniteDimAlgebra
from qflab.census import dimension_audit, enumerate_quads, gram_oracle, squarezero_counterexample_check
from qflab.exact import PolyRing, PrimeField, Rationals, RatFuncField
from qflab.finite_rings import presented_module, zmod
from qflab.kaehler import kaehler_module, w_to_omega
from qflab.lab import (
    epimorphism_check,
    exterior_model_check,
    flatness_comparison,
    frobenius_model,
    i_squared_model,
    q_phi,
    squares_subalgebra,
)
from qflab.quadmaps import (
    axiom_check,
    check_all,
    constant_scalars,
    derivation_form,
    evaluation_matrix,
    exotic_form,
    hom_s_elements,
    higher_derivative_form,
    polarize,
    resolution_quad,
)
from qflab.scenarios import bounded_degree_polys, dual_numbers_char0, f4, f8, f9, gaussian_rationals, truncated_char2

Q, F2, F3 = Rationals(), PrimeField(2), PrimeField(3)
criterion = pytest.mark.criterion


@pytest.fixture(scope="module")
def trunc():
    return q_phi(truncated_char2().realization)


@criterion(1, "finite-field census: relative = absolute for F4/F2 (64) and F9/F3 (729)")
@pytest.mark.parametrize("carrier,p,count", [(f4, 2, 64), (f9, 3, 729)])
def test_finite_field_census(carrier, p, count):
    S = carrier().realization
    t0 = time.perf_counter()
    c = enumerate_quads(S, 2)
    distinct, inside = gram_oracle(S)
    elapsed = time.perf_counter() - t0
    assert c.p == p
    assert c.count_relative == c.count_absolute == count
    assert count == (p ** S.dim) ** 3  # |S|^3, three Gram coefficients
    assert distinct == inside == count
    assert elapsed < 30


@criterion(2, "W = 0 and dim Q = dim S for Q(i), F4, F8, F9")
@pytest.mark.parametrize("carrier", [gaussian_rationals, f4, f8, f9])
def test_w_vanishes_for_separable_fields(carrier):
    S = carrier().realization
    q = q_phi(S)
    assert q.w_dim == 0
    assert q.dim == S.dim


@criterion(3, "Q[T]/T^3 over Q: dim W = 2 = dim Omega, comparison bijective, I^2 model inverse")
def test_nontrivial_w_char0():
    A = dual_numbers_char0()
    S = A.realization
    q, om = q_phi(S), kaehler_module(A)
    assert q.w_dim == 2 == om.dim
    cmp_ = w_to_omega(q, om)
    assert cmp_.well_defined and cmp_.rank == 2 and cmp_.kernel_dim == 0 and cmp_.surjective
    model = i_squared_model(S, q)
    assert model.dim == q.dim == 5
    for name in ("to-model then back is identity", "from-model then back is identity",
                 "to-model is a ring map", "from-model is a ring map",
                 "compatible with maps from S", "compatible with maps to S"):
        assert model.checks[name] is True, name
    assert model.passed


@criterion(4, "F2[T]/T^4 over F2: dim W = 4 directly and via the Frobenius model, squares not an epimorphism")
def test_nontrivial_w_char2(trunc):
    S = trunc.S
    assert trunc.w_dim == 4
    model = frobenius_model(S, trunc)
    assert model.dim - S.dim == 4
    for name in ("to-model then back is identity", "from-model then back is identity",
                 "to-model is a ring map", "from-model is a ring map",
                 "compatible with maps from S", "compatible with maps to S"):
        assert model.checks[name] is True, name
    assert epimorphism_check(S, squares_subalgebra(S)) is False


def _every_carrier():
    yield from (fn().realization for fn in (gaussian_rationals, f4, f8, f9, dual_numbers_char0, truncated_char2))
    yield FiniteDimAlgebra.base_field(Q)
    yield FiniteDimAlgebra.base_field(F2)
    yield FiniteDimAlgebra.from_modulus(F2, [0, 0, 1])
    yield FiniteDimAlgebra.from_modulus(F3, [0, 0, 1])
    yield FiniteDimAlgebra.from_modulus(Q, [0, 0, 0, 0, 1])
    yield FiniteDimAlgebra.from_modulus(F2, [1, 1, 0, 1])


@criterion(5, "s⊗s'⊗1 + s'⊗s⊗1 = 1⊗1⊗2ss' in every constructed Q")
def test_symmetrized_cross_everywhere():
    count = 0
    for S in _every_carrier():
        assert q_phi(S).symmetrized_cross_failures() == []
        count += 1
    assert count == 12


@criterion(6, "function-field witness pol((T,0),(0,1)) = 1 but T pol((1,0),(0,1)) = 0")
@pytest.mark.parametrize("base", [Q, F3], ids=["Q(T)", "F3(T)"])
def test_function_field_witness(base):
    K = RatFuncField(base, ["T"])
    T, one, zero = K.gen("T"), K.one(), K.zero()
    q = derivation_form("T", K, constant_scalars(K, [1, 2]))
    assert polarize(q, (T, zero), (zero, one)) == one
    assert T * polarize(q, (one, zero), (zero, one)) == zero
    samples = [(one, zero), (zero, one), (T, zero), (zero, T), (T, one), (one / T, T * T + one)]
    s = axiom_check(q, "S-bilinearity", "sampled", samples=samples, scalars=[T, T + one, one / T])
    assert s.verdict == "fail"
    assert s.witness.text == "lambda=T, x=(1, 0), y=(0, 1)"
    assert (s.witness.lhs, s.witness.rhs) == ("1", "0")
    r = axiom_check(q, "R-bilinearity", "sampled", samples=samples)
    assert r.verdict == "no-counterexample-found"


@criterion(7, "q_{1,2} over F2[X,Y] and the invertible 2^n x 2^n evaluation matrices")
def test_higher_derivative_forms():
    R = PolyRing(F2, ["X", "Y"])
    X, Y = R.gens()
    zero = R.zero()
    q = higher_derivative_form(R, [1, 2])
    polys, monos = bounded_degree_polys(R, 1)
    assert len(polys) == 16
    samples = [(F, G) for F in polys for G in polys]
    gens = [(m, zero) for m in monos] + [(zero, m) for m in monos]
    # every element of the bounded-degree group is visited, but S is infinite, so no proof is claimed
    assert axiom_check(q, "square-scaling", "sampled", samples=samples, scalars=polys).verdict == "no-counterexample-found"
    assert axiom_check(q, "biadditivity", "sampled", samples=samples, generators=gens).verdict == "no-counterexample-found"
    sb = axiom_check(q, "S-bilinearity", "sampled", samples=[(X, zero), (zero, Y)], scalars=[X])
    assert sb.verdict == "fail" and sb.witness.text == "lambda=X, x=(X, 0), y=(0, Y)"
    for n in (2, 3):
        K = RatFuncField(F2, [f"T{i + 1}" for i in range(n)])
        subsets, m = evaluation_matrix(K)
        assert len(subsets) == 2 ** n and m.rank() == 2 ** n
        assert len([s for s in subsets if s]) == 2 ** n - 1


@criterion(8, "square-balanced model identities for the exterior extensions")
def test_model_identities():
    for n, p in [(1, 0), (1, 2), (1, 3), (2, 2)]:
        checks = exterior_model_check(n, p).checks
        assert all(checks.values()), [k for k, v in checks.items() if not v]
        assert checks["(T+S)(T-S) = T^2"] is True
        units = [k for k in checks if k.startswith("F(T+S) = F + F'S for F = ")]
        assert len(units) == 5 and all(checks[k] for k in units)
    for p in (2, 3):
        checks = exterior_model_check(1, p).checks
        assert checks[f"(T-S)^{p} - (T+S)^{p} = -2S^{p}"] is True
        assert checks[f"(T-S)^{p} - (T+S)^{p} = 0"] is True
    checks = exterior_model_check(2, 2).checks
    assert checks["(1⊗T1 + T1⊗1)^2 = 0"] is True and checks["(1⊗T2 + T2⊗1)^2 = 0"] is True


@criterion(9, "resolution over Z/4 for M = Z/2, N = Z/4 gives order 4, equal to direct enumeration")
def test_resolution_formula():
    Z4 = zmod(4)
    res = resolution_quad(Z4, [[2]], 1, presented_module(Z4, 1))
    assert res.order == 4 == res.direct_order
    assert res.agree


@criterion(10, "Δ = C2-fixed subspace, and the square-zero counterexample")
def test_flatfixed_suite():
    for fn in (f4, gaussian_rationals, truncated_char2):
        rep = flatness_comparison(fn().realization)
        assert rep.equal and rep.delta_dim == rep.fixed_dim
    sz = squarezero_counterexample_check()
    assert sz.squares_in_ideal is True
    assert sz.xyz_excluded is True
    assert sz.fixed_point_chain is True


@criterion(11, "exotic forms on F2[T]/T^4: S/R-quadratic, S-bilinear iff f = 0, ratio 2^dim Hom")
def test_exotic_form_soundness(trunc):
    fs = hom_s_elements(trunc)
    assert len(fs) == 16 and fs[0].is_zero()
    for fmat in fs:
        reps = check_all(exotic_form(trunc, fmat))
        for ax in ("square-scaling", "biadditivity", "R-bilinearity"):
            assert reps[ax].verdict == "pass" and reps[ax].proved, (ax, fmat)
        if fmat.is_zero():
            assert reps["S-bilinearity"].verdict == "pass" and reps["S-bilinearity"].proved
        else:
            assert reps["S-bilinearity"].verdict == "fail" and reps["S-bilinearity"].witness is not None
    S = trunc.S
    c = enumerate_quads(S, 2)
    audit = dimension_audit(S, c)
    assert audit.passes
    assert c.count_relative // c.count_absolute == 2 ** audit.dim_hom == 16
    assert c.count_relative == c.count_absolute * 2 ** audit.dim_hom


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
