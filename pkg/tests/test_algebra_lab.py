import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import F2, F3, FIELDS, Q
from qflab.algebra import AlgebraError, FiniteDimAlgebra
from qflab.lab import (
    c2_fixed,
    delta_subalgebra,
    epimorphism_check,
    exterior_model_check,
    flatness_comparison,
    frobenius_model,
    i_squared_model,
    q_phi,
    squares_subalgebra,
    tensor_over_subalgebra,
    tensor_square,
)
from qflab.scenarios import dual_numbers_char0, f4, f8, f9, gaussian_rationals, truncated_char2


@pytest.fixture(scope="module")
def carriers():
    return {name: fn().realization for name, fn in [
        ("Q(i)", gaussian_rationals), ("F4", f4), ("F8", f8), ("F9", f9),
        ("Q[T]/T^3", dual_numbers_char0), ("F2[T]/T^4", truncated_char2)]}


@pytest.fixture(scope="module")
def qs(carriers):
    return {k: q_phi(S) for k, S in carriers.items()}


def monogenic(p, coeffs):
    return FiniteDimAlgebra.from_modulus(FIELDS[p], list(coeffs) + [1])


# tensor square, diagonal, fixed points


def test_tensor_square_of_base_field():
    S = FiniteDimAlgebra.base_field(Q)
    assert tensor_square(S).ideal.dim == 0


@pytest.mark.parametrize("name", ["Q(i)", "F4"])
def test_tensor_square_of_quadratic_fields(carriers, name):
    T2, mu, I = tensor_square(carriers[name])
    assert T2.dim == 4 and I.dim == 2 and mu.rank() == 2


def test_multiplication_map_on_pairs(carriers):
    S = carriers["Q[T]/T^3"]
    T2, mu, _ = tensor_square(S)
    for i in range(3):
        for j in range(3):
            e = [0] * 9
            e[i * 3 + j] = 1
            assert mu(tuple(Q.coerce(x) for x in e)) == S.mul(S.basis(i), S.basis(j))


@pytest.mark.parametrize("name,dim", [("F4", 3), ("Q(i)", 3), ("F2[T]/T^4", 10)])
def test_delta_equals_fixed_points(carriers, name, dim):
    rep = flatness_comparison(carriers[name])
    assert rep.equal and rep.delta_dim == rep.fixed_dim == dim


def test_delta_of_base_field():
    assert delta_subalgebra(FiniteDimAlgebra.base_field(F3)).dim == 1


def test_gaussian_delta_span(carriers):
    S = carriers["Q(i)"]
    D = delta_subalgebra(S)
    # 1⊗1, i⊗i and 1⊗i + i⊗1
    assert set(D.basis) == {(1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1)}


# Q_phi


@pytest.mark.parametrize("name,dim,w", [("F4", 2, 0), ("Q(i)", 2, 0), ("F8", 3, 0), ("F9", 2, 0),
                                        ("Q[T]/T^3", 5, 2), ("F2[T]/T^4", 8, 4)])
def test_q_phi_dimensions(qs, name, dim, w):
    q = qs[name]
    assert (q.dim, q.w_dim) == (dim, w)
    assert q.dim == q.S.dim + q.w_dim
    assert q.presentation == "direct"


def test_w_of_truncated_char2_via_square_subalgebra(carriers, qs):
    # independent route: S⊗_B S with B the squares, of dimension 2 * 2 * dim B = 8
    S = carriers["F2[T]/T^4"]
    B = squares_subalgebra(S)
    assert B.dim == 2
    assert tensor_over_subalgebra(S, B).dim == 8 == qs["F2[T]/T^4"].dim


@pytest.mark.parametrize("name", ["F4", "Q(i)", "F8", "F9", "Q[T]/T^3", "F2[T]/T^4"])
def test_augmentation_splits_structure_map(qs, name):
    q = qs[name]
    S = q.S
    for s in S.basis_vectors():
        assert q.augmentation(q.structure(s)) == s
    for v in q.w.basis:
        assert not any(q.augmentation(v))


@pytest.mark.parametrize("name", ["F4", "Q(i)", "F8", "F9", "Q[T]/T^3", "F2[T]/T^4"])
def test_symmetrized_cross(qs, name):
    assert qs[name].symmetrized_cross_failures() == []


def test_char2_cross_form_is_symmetric(qs):
    q = qs["F2[T]/T^4"]
    S = q.S
    for a in S.basis_vectors():
        for b in S.basis_vectors():
            assert q.cross(a, b) == q.cross(b, a)


# alternative presentations


@pytest.mark.parametrize("name,dim", [("Q(i)", 2), ("Q[T]/T^3", 5)])
def test_i_squared_model(carriers, qs, name, dim):
    rep = i_squared_model(carriers[name], qs[name])
    assert rep.dim == dim and rep.passed, rep.checks


def test_i_squared_model_of_base_field():
    S = FiniteDimAlgebra.base_field(Q)
    rep = i_squared_model(S)
    assert rep.dim == 1 and rep.passed and rep.to_model.is_identity()


def test_i_squared_rejects_char2(carriers):
    with pytest.raises(ValueError, match="2"):
        i_squared_model(carriers["F4"])


@pytest.mark.parametrize("name,dim", [("F4", 2), ("F2[T]/T^4", 8), ("F8", 3)])
def test_frobenius_model(carriers, qs, name, dim):
    rep = frobenius_model(carriers[name], qs[name])
    assert rep.dim == dim and rep.passed, rep.checks
    assert rep.dim - carriers[name].dim == qs[name].w_dim


def test_frobenius_rejects_odd_char(carriers):
    with pytest.raises(ValueError, match="2"):
        frobenius_model(carriers["F9"])


# epimorphisms


def test_identity_is_an_epimorphism():
    assert epimorphism_check(FiniteDimAlgebra.base_field(F2))


@pytest.mark.parametrize("name", ["F4", "Q(i)"])
def test_field_extensions_are_not_epimorphisms(carriers, name):
    assert not epimorphism_check(carriers[name])


def test_squares_inclusion(carriers):
    assert epimorphism_check(carriers["F4"], squares_subalgebra(carriers["F4"]))
    assert not epimorphism_check(carriers["F2[T]/T^4"], squares_subalgebra(carriers["F2[T]/T^4"]))


# exterior models


@pytest.mark.parametrize("n,p", [(1, 0), (1, 2), (1, 3), (2, 2), (3, 2)])
def test_exterior_model_identities(n, p):
    rep = exterior_model_check(n, p)
    assert rep.passed, [k for k, v in rep.checks.items() if not v]


def test_exterior_model_check_reports_named_identities():
    checks = exterior_model_check(2, 2).checks
    assert checks["(T+S)(T-S) = T^2"]
    assert any("(1⊗T" in k for k in checks)
    assert exterior_model_check(1, 3).checks["(T-S)^3 - (T+S)^3 = 0"]


def test_exterior_model_size_bound():
    with pytest.raises(ValueError):
        exterior_model_check(5, 2)


# properties over random monogenic algebras F_p[T]/(f), Q[T]/(f)

monic_low = st.sampled_from([0, 2, 3]).flatmap(
    lambda p: st.tuples(st.just(p), st.lists(st.integers(-2, 2) if p == 0 else st.integers(0, p - 1), min_size=1, max_size=3)))


@settings(max_examples=25, deadline=None)
@given(monic_low)
def test_q_phi_invariants_on_random_algebras(args):
    p, coeffs = args
    S = monogenic(p, coeffs)
    q = q_phi(S)
    assert q.dim == S.dim + q.w_dim
    assert q.symmetrized_cross_failures() == []
    assert all(q.augmentation(q.structure(s)) == s for s in S.basis_vectors())
    assert delta_subalgebra(S) == c2_fixed(S)
    if epimorphism_check(S):
        assert q.w_dim == 0
    model = frobenius_model(S, q) if p == 2 else i_squared_model(S, q)
    assert model.passed and model.dim == q.dim


def test_ill_formed_tables_rejected():
    with pytest.raises(AlgebraError, match="commutative"):
        FiniteDimAlgebra(Q, ["1", "e"], [[(1, 0), (0, 1)], [(0, 0), (1, 0)]], (1, 0))
    # basis 1, a, b with a*a = b, a*b = 0, b*b = 1: (a*a)*b = 1 but a*(a*b) = 0
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    z = (0, 0, 0)
    table = [[e[0], e[1], e[2]], [e[1], e[2], z], [e[2], z, e[0]]]
    with pytest.raises(AlgebraError, match="associative"):
        FiniteDimAlgebra(Q, ["1", "a", "b"], table, e[0])
