from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gen import F2, F3, FIELDS, Q, polys, to_sympy
from qflab.exact import (
    ExteriorAlgebra,
    MultiPoly,
    PolyRing,
    RatFunc,
    RatFuncField,
    as_dual,
    dual_numbers,
    dual_shift,
    ext_field,
    poly_derivative,
    poly_gcd,
    ratfunc_arith,
    ratfunc_derivative,
)

XYZ = ("X", "Y", "Z")


# poly_derivative


def test_power_rule_over_rationals():
    T = PolyRing(Q, ["T"]).gen("T")
    assert poly_derivative(T ** 3, "T") == 3 * T ** 2
    assert str(poly_derivative(T ** 3, "T")) == "3*T^2"


def test_characteristic_two_kills_even_coefficient():
    X, Y = PolyRing(F2, ["X", "Y"]).gens()
    assert poly_derivative(X ** 2 * Y, "X").is_zero()


def test_mixed_partial_of_xy_in_char_two():
    X, Y = PolyRing(F2, ["X", "Y"]).gens()
    assert poly_derivative(poly_derivative(X * Y, "X"), "Y") == 1


def test_unknown_variable_rejected():
    T = PolyRing(Q, ["T"]).gen("T")
    with pytest.raises(ValueError, match="unknown variable"):
        poly_derivative(T, "Z")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([0, 2, 3]).flatmap(lambda p: st.tuples(polys(p, XYZ), polys(p, XYZ))),
       st.sampled_from(XYZ))
def test_leibniz_rule(FG, var):
    F, G = FG
    lhs = poly_derivative(F * G, var)
    assert lhs == poly_derivative(F, var) * G + F * poly_derivative(G, var)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0, 2, 3]).flatmap(lambda p: polys(p, XYZ)))
def test_polynomial_canonical_form_is_idempotent(F):
    again = MultiPoly(F.field, F.vars, F.terms)
    assert again == F and hash(again) == hash(F) and str(again) == str(F)
    assert all(not F.field.is_zero(c) for c in F.terms.values())


# gcd against sympy


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0, 3]).flatmap(lambda p: st.tuples(st.just(p), polys(p, ("X", "Y"), 2, 3),
                                                           polys(p, ("X", "Y"), 2, 3), polys(p, ("X", "Y"), 1, 2))))
def test_gcd_matches_sympy(args):
    p, A, B, C = args
    assume(not C.is_zero())
    F, G = A * C, B * C
    assume(not (F.is_zero() and G.is_zero()))
    g = poly_gcd(F, G)
    (fe, syms), (ge, _), (me, _) = to_sympy(F), to_sympy(G), to_sympy(g)
    kw = {"modulus": p} if p else {"domain": "QQ"}
    expected = sympy.Poly(sympy.gcd(sympy.Poly(fe, *syms, **kw), sympy.Poly(ge, *syms, **kw)), *syms, **kw)
    got = sympy.Poly(me, *syms, **kw)
    # both sides up to a unit: compare monic forms
    assert got.monic() == expected.monic()


# rational functions


def _ratfuncs(p):
    K = RatFuncField(FIELDS[p], ["T"])
    return K, K.gen("T"), K.one()


def test_derivative_of_reciprocal_char0():
    K, T, one = _ratfuncs(0)
    assert ratfunc_derivative(one / T, "T") == -one / (T * T)


def test_derivative_of_reciprocal_char2():
    K, T, one = _ratfuncs(2)
    assert ratfunc_derivative(one / T, "T") == one / (T * T)


def test_inverse_pair_multiplies_to_one():
    K, T, one = _ratfuncs(0)
    F, G = T * T + one, T
    assert ratfunc_arith(ratfunc_arith(F, G, "div"), ratfunc_arith(G, F, "div"), "mul") == one


def test_division_by_zero():
    K, T, one = _ratfuncs(3)
    with pytest.raises(ZeroDivisionError):
        ratfunc_arith(one, K.zero(), "div")


def test_fraction_is_reduced_with_monic_denominator():
    R = PolyRing(Q, ["T"])
    T = R.gen("T")
    r = RatFunc(2 * (T * T - 1), 4 * (T + 1))
    assert r.den == 1 and r.num == (T - 1).scale(Fraction(1, 2))
    s = RatFunc(T, 3 * T * T)
    assert s.den == T and s.num == Fraction(1, 3)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([0, 2, 3]).flatmap(lambda p: st.tuples(polys(p, ("S", "T"), 2, 3), polys(p, ("S", "T"), 2, 3))))
def test_ratfunc_canonical_form_is_idempotent(NG):
    N, D = NG
    assume(not D.is_zero())
    r = RatFunc(N, D)
    again = RatFunc(r.num, r.den)
    assert (again.num, again.den) == (r.num, r.den)
    assert r.den.leading_coeff() == r.den.field.one()
    assert poly_gcd(r.num, r.den).is_constant() or r.num.is_zero()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([0, 3]).flatmap(lambda p: st.tuples(polys(p, ("T",), 3, 3), polys(p, ("T",), 3, 3),
                                                           polys(p, ("T",), 2, 3), polys(p, ("T",), 2, 3))))
def test_quotient_rule_is_a_derivation(parts):
    a, b, c, d = parts
    assume(not b.is_zero() and not d.is_zero())
    x, y = RatFunc(a, b), RatFunc(c, d)
    assert (x * y).derivative("T") == x.derivative("T") * y + x * y.derivative("T")
    assert (x + y).derivative("T") == x.derivative("T") + y.derivative("T")


# extension fields


def test_f4_generator_squares_to_x_plus_one():
    E = ext_field(F2, [1, 1, 1])
    x = E.generator
    assert E.render(E.mul(x, x)) == "x + 1"


def test_gaussian_generator_squares_to_minus_one():
    E = ext_field(Q, [1, 0, 1])
    assert E.mul(E.generator, E.generator) == E.coerce(-1)


def test_f9_fourth_power_by_repeated_squaring():
    E = ext_field(F3, [1, 0, 1])
    x = E.generator
    sq = E.mul(x, x)
    assert E.mul(sq, sq) == E.one()
    assert E.power(x, 4) == E.one()


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError, match="reducible"):
        ext_field(F2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2


def test_high_degree_modulus_needs_assertion():
    with pytest.raises(ValueError):
        ext_field(F2, [1, 1, 0, 0, 1])
    E = ext_field(F2, [1, 1, 0, 0, 1], asserted_irreducible=True)
    assert E.degree == 4 and E.order == 16


@pytest.mark.parametrize("p,modulus", [(2, [1, 1, 1]), (3, [1, 0, 1]), (2, [1, 1, 0, 1])])
def test_finite_extension_field_axioms(p, modulus):
    E = ext_field(FIELDS[p], modulus)
    elems = list(E.elements())
    assert len(elems) == E.order
    for a in elems:
        if not E.is_zero(a):
            assert E.mul(a, E.inv(a)) == E.one()
        for b in elems[:5]:
            assert E.mul(a, b) == E.mul(b, a)
            for c in elems[:3]:
                assert E.mul(a, E.add(b, c)) == E.add(E.mul(a, b), E.mul(a, c))
                assert E.mul(E.mul(a, b), c) == E.mul(a, E.mul(b, c))


# dual numbers and exterior algebras


def test_dual_shift_examples():
    K, T, one = _ratfuncs(0)
    assert dual_shift(T * T) == (T * T, 2 * T)
    K2, T2, _ = _ratfuncs(2)
    assert dual_shift(T2 * T2)[1] == K2.zero()
    assert dual_shift(one / T) == (one / T, -one / (T * T))
    D = dual_numbers(K)
    shifted_t = D.add(D.scalar(T), D.gen(0))
    assert D.mul(as_dual(one / T), shifted_t) == D.one()


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([0, 2, 3]).flatmap(lambda p: st.tuples(polys(p, ("T",), 3, 3), polys(p, ("T",), 3, 3),
                                                              polys(p, ("T",), 2, 2))))
def test_dual_shift_is_a_ring_map(parts):
    a, b, d = parts
    assume(not d.is_zero())
    F, G = RatFunc(a, d), RatFunc(b)
    D = dual_numbers(RatFuncField(a.field, ["T"]))
    assert as_dual(F * G) == D.mul(as_dual(F), as_dual(G))
    assert as_dual(F + G) == D.add(as_dual(F), as_dual(G))


@pytest.mark.parametrize("p", [0, 3, 2])
def test_square_of_generator_sum(p):
    L = ExteriorAlgebra(FIELDS[p], 2)
    s = L.add(L.gen(0), L.gen(1))
    square = L.mul(s, s)
    if p == 2:
        assert L.is_zero(square)
    else:
        assert square == L.mul(L.scalar(2), L.mul(L.gen(0), L.gen(1)))
    assert L.is_zero(L.mul(L.gen(0), L.gen(0)))
    assert L.mul(L.gen(0), L.gen(1)) == L.mul(L.gen(1), L.gen(0))
