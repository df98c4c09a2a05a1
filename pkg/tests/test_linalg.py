from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ginv.errors import MalformedSpec, NoSolution, NotAUnit, ShapeMismatch
from ginv.linalg import (
    GF,
    QQ,
    FieldMatrix,
    invert_unit,
    one_inverse,
    rank,
    rref,
    solve_left,
    solve_right,
)


def Q(rows):
    return FieldMatrix.from_rows(QQ, rows)


def rationals():
    return st.builds(F, st.integers(-5, 5), st.integers(1, 4))


def square(field_scalars, max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.lists(st.lists(field_scalars, min_size=n, max_size=n), min_size=n, max_size=n))


def fields_and_matrices():
    rat = square(rationals()).map(lambda r: Q(r))
    gf = st.sampled_from([2, 3, 5, 7]).flatmap(
        lambda p: square(st.integers(0, p - 1)).map(lambda r: FieldMatrix.from_rows(GF(p), r)))
    return st.one_of(rat, gf)


class TestExamples:
    def test_rref_rational(self):
        out = rref(Q([[1, 0], [-1, 0]]))
        assert out.matrix == Q([[1, 0], [0, 0]])
        assert out.rank == 1 and out.pivots == (0,)

    def test_rref_identity(self):
        eye = FieldMatrix.identity(QQ, 2)
        assert rref(eye).matrix == eye and rref(eye).rank == 2

    def test_rref_gf2(self):
        m = FieldMatrix.from_rows(GF(2), [[1, 0], [1, 0]])
        assert rref(m).matrix.tolist() == [[1, 0], [0, 0]]

    def test_solve_right_identity(self):
        b = Q([[1, 2], ["1/3", -4]])
        assert solve_right(FieldMatrix.identity(QQ, 2), b) == b

    def test_solve_right_no_solution(self):
        with pytest.raises(NoSolution):
            solve_right(Q([[2, 0], [0, 0]]), Q([[1, 0], [-1, 0]]))

    def test_solve_left(self):
        a = Q([[2, 0], [0, 0]])
        x = solve_left(a, Q([[1, 0], [-1, 0]]))
        assert x == Q([["1/2", 0], ["-1/2", 0]])
        assert x @ a == Q([[1, 0], [-1, 0]])

    def test_invert_unit(self):
        m = Q([["3/2", "1/2"], ["-1/2", "1/2"]])
        inv = invert_unit(m)
        assert m @ inv == inv @ m == FieldMatrix.identity(QQ, 2)

    def test_singular_is_not_a_unit(self):
        with pytest.raises(NotAUnit):
            invert_unit(Q([[0, 0], [-2, 0]]))

    def test_one_inverse_examples(self):
        assert one_inverse(FieldMatrix.identity(QQ, 2)) == FieldMatrix.identity(QQ, 2)
        assert one_inverse(FieldMatrix.zeros(QQ, 2, 2)) == FieldMatrix.zeros(QQ, 2, 2)
        a = Q([[2, 0], [0, 0]])
        assert one_inverse(a) == Q([["1/2", 0], [0, 0]])


class TestValidation:
    def test_floats_rejected(self):
        with pytest.raises(MalformedSpec):
            Q([[0.5]])

    def test_composite_modulus_rejected(self):
        with pytest.raises(MalformedSpec):
            GF(4)

    def test_gf_fraction_canonicalized(self):
        assert FieldMatrix.from_rows(GF(5), [["1/2"]]).tolist() == [[3]]

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            solve_right(Q([[1, 0]]), Q([[1], [2]]))

    def test_field_mismatch(self):
        with pytest.raises(ShapeMismatch):
            solve_right(Q([[1]]), FieldMatrix.from_rows(GF(3), [[1]]))


@settings(max_examples=500, deadline=None)
@given(fields_and_matrices())
def test_one_inverse_is_inner(a):
    assert a @ one_inverse(a) @ a == a


@settings(max_examples=200, deadline=None)
@given(fields_and_matrices())
def test_rref_idempotent_and_rank_stable(m):
    r = rref(m)
    assert rref(r.matrix).matrix == r.matrix
    assert rank(m) == rank(m.T) == rank(r.matrix) <= min(m.shape)


@settings(max_examples=200, deadline=None)
@given(fields_and_matrices())
def test_invert_unit_two_sided(m):
    try:
        inv = invert_unit(m)
    except NotAUnit:
        assert rank(m) < m.shape[0]
        return
    eye = FieldMatrix.identity(m.field, m.shape[0])
    assert inv @ m == m @ inv == eye


@settings(max_examples=200, deadline=None)
@given(square(rationals(), max_dim=5))
def test_rank_matches_sympy(rows):
    assert rank(Q(rows)) == sympy.Matrix(rows).rank()


@settings(max_examples=100, deadline=None)
@given(square(rationals(), max_dim=4), st.data())
def test_solve_right_matches_column_space(rows, data):
    a = Q(rows)
    n = a.shape[0]
    b = Q(data.draw(st.lists(st.lists(rationals(), min_size=1, max_size=1), min_size=n, max_size=n)))
    augmented = Q([list(r) + list(s) for r, s in zip(a.rows, b.rows)])
    try:
        x = solve_right(a, b)
    except NoSolution:
        assert rank(augmented) > rank(a)
        return
    assert a @ x == b
    assert rank(augmented) == rank(a)
