from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ, GF
from sympy.polys.matrices import DomainMatrix

from gen import F2, F3, FIELDS, Q, matrices, vectors
from qflab.algebra import FiniteDimAlgebra
from qflab.exact import ext_field
from qflab.linalg import (
    ExactMatrix,
    Subspace,
    is_closed,
    kernel,
    mult_closure,
    quotient_space,
    rref,
    subspace_ops,
    unit_vector,
    vec_add,
    vec_scale,
)
from qflab.lab import diagonal_generators


def _sympy_rank(p, rows, ncols):
    dom = GF(p) if p else QQ
    conv = (lambda c: dom(int(c))) if p else (lambda c: dom(c.numerator, c.denominator))
    return DomainMatrix([[conv(c) for c in r] for r in rows], (len(rows), ncols), dom).rank()


def _transpose(rows, ncols):
    return [tuple(r[j] for r in rows) for j in range(ncols)]


def test_identity_rank():
    assert rref(ExactMatrix.identity(Q, 3))[1] == 3


def test_zero_matrix_rank():
    assert rref(ExactMatrix.zeros(Q, 2, 5))[1] == 0


def test_proportional_rows():
    m = ExactMatrix.from_rows(Q, [[1, 2], [2, 4]])
    reduced, r, piv = rref(m)
    assert r == 1 and piv == [0] and reduced.rows == ((1, 2),)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([0, 2, 3, 7]).flatmap(lambda p: st.tuples(st.just(p), matrices(p))))
def test_rank_matches_oracle_and_transpose(args):
    p, (ncols, rows) = args
    f = FIELDS[p]
    rows = [tuple(f.coerce(c) for c in r) for r in rows]
    r = rref(ExactMatrix.from_rows(f, rows, ncols))[1]
    assert r == _sympy_rank(p, rows, ncols)
    assert r == rref(ExactMatrix.from_rows(f, _transpose(rows, ncols), len(rows)))[1]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([0, 2, 3]).flatmap(lambda p: st.tuples(st.just(p), matrices(p))))
def test_rref_is_a_projection_and_canonical(args):
    p, (ncols, rows) = args
    f = FIELDS[p]
    reduced, r, piv = rref(ExactMatrix.from_rows(f, rows, ncols))
    again, _, piv2 = rref(reduced)
    assert again.rows == reduced.rows and piv == piv2
    assert list(piv) == sorted(set(piv))
    for i, c in enumerate(piv):
        assert reduced.rows[i][c] == f.one()
        assert all(f.is_zero(reduced.rows[k][c]) for k in range(r) if k != i)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0, 3]).flatmap(lambda p: st.tuples(st.just(p), st.lists(vectors(p, 4), max_size=4),
                                                           st.lists(vectors(p, 4), max_size=4))))
def test_subspace_sum_and_intersection_dimensions(args):
    p, A, B = args
    f = FIELDS[p]
    a, b = Subspace.span(f, 4, A), Subspace.span(f, 4, B)
    s, i = subspace_ops(a, b, "sum"), subspace_ops(a, b, "intersection")
    assert s.dim + i.dim == a.dim + b.dim
    assert all(a.contains(v) and b.contains(v) for v in i.basis)
    assert subspace_ops(a, a, "sum") == a
    assert subspace_ops(a, Subspace.zero(f, 4), "intersection") == Subspace.zero(f, 4)
    assert subspace_ops(s, a, "contains") and subspace_ops(a, b, "quotient-dim") == a.dim - i.dim


def test_shared_axis_intersection():
    e = [unit_vector(Q, 3, i) for i in range(3)]
    meet = subspace_ops(Subspace.span(Q, 3, e[:2]), Subspace.span(Q, 3, e[1:]), "intersection")
    assert meet.dim == 1 and meet.basis == (e[1],)


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        subspace_ops(Subspace.zero(Q, 2), Subspace.zero(Q, 3), "sum")


def test_quotient_by_zero_is_identity():
    qs = quotient_space(3, Subspace.zero(Q, 3))
    assert qs.dim == 3 and qs.project.is_identity()


def test_quotient_by_everything():
    assert quotient_space(3, Subspace.full(Q, 3)).dim == 0


def test_quotient_by_a_line():
    u = Subspace.span(Q, 4, [(1, 1, 0, 0)])
    qs = quotient_space(4, u)
    e1, e2 = unit_vector(Q, 4, 0), unit_vector(Q, 4, 1)
    assert qs.dim == 3
    p1, p2 = qs.proj(e1), qs.proj(e2)
    assert p1 == tuple(-x for x in p2) and any(p1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0, 2, 3]).flatmap(lambda p: st.tuples(st.just(p), st.lists(vectors(p, 5), max_size=4),
                                                              vectors(p, 5))))
def test_quotient_projection_and_section(args):
    p, gens, v = args
    f = FIELDS[p]
    u = Subspace.span(f, 5, gens)
    qs = quotient_space(5, u)
    assert qs.dim == 5 - u.dim
    assert qs.proj(qs.lift_vec(qs.proj(v))) == qs.proj(v)
    assert all(not any(qs.proj(b)) for b in u.basis)
    if qs.dim:
        # full rank, and the kernel of the projection is exactly u
        assert qs.project.rank() == qs.dim
        assert kernel(qs.project) == u


def _f4():
    return FiniteDimAlgebra.from_extension(ext_field(F2, [1, 1, 1]))


def test_closure_of_unit():
    S = FiniteDimAlgebra.from_modulus(Q, [0, 0, 0, 1])
    assert mult_closure(S, [S.one()]).dim == 1


def test_closure_of_full_basis():
    S = FiniteDimAlgebra.from_modulus(Q, [0, 0, 0, 1])
    assert mult_closure(S, S.basis_vectors()).dim == 3


def test_diagonal_closure_in_f4_tensor_square():
    S = _f4()
    T2 = S.tensor(S)
    D = mult_closure(T2, diagonal_generators(S))
    assert D.dim == 3
    # hand echelon over F2: 1⊗1, x⊗x and 1⊗x + x⊗1
    assert set(D.basis) == {(1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1)}


@settings(max_examples=30, deadline=None)
@given(st.lists(vectors(3, 4), min_size=1, max_size=3))
def test_closure_output_is_closed(gens):
    S = FiniteDimAlgebra.from_modulus(F3, [0, 0, 1]).tensor(FiniteDimAlgebra.from_modulus(F3, [2, 0, 1]))
    assert S.dim == 4
    C = mult_closure(S, gens)
    assert is_closed(S, C)
    assert all(C.contains(g) for g in gens)


def test_vector_helpers_are_exact():
    v = vec_add(Q, (Fraction(1, 3), 0), (Fraction(2, 3), 1))
    assert v == (1, 1) and vec_scale(Q, Fraction(1, 2), v) == (Fraction(1, 2), Fraction(1, 2))
