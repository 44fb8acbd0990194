from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcinv import linalg
from bcinv.errors import DimensionMismatch
from bcinv.linalg import (
    PrimeField,
    Rationals,
    Side,
    column_space,
    identity,
    inner_inverse,
    inner_inverse_family,
    inverse,
    left_null_space,
    mat_mul,
    matrix_equation_solvable,
    null_space,
    rref,
    row_space,
    second_inner_inverse,
    solve_left,
    solve_right,
    subspace_direct_sum,
    subspace_intersection_trivial,
    subspace_subset,
    transpose,
)

QQ = Rationals()
F2 = PrimeField(2)
F5 = PrimeField(5)


def qm(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def small_q_matrix(rows, cols):
    frac = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    return st.lists(
        st.lists(frac, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(qm)


class TestRref:
    def test_identity(self):
        res = rref(QQ, identity(QQ, 2))
        assert res.rref == identity(QQ, 2)
        assert res.rank == 2
        assert res.transform == identity(QQ, 2)

    def test_scalar(self):
        res = rref(QQ, qm([[2]]))
        assert res.rref == qm([[1]])
        assert res.rank == 1
        assert res.transform == qm([["1/2"]])

    def test_dependent_rows(self):
        res = rref(QQ, qm([[1, 2], [2, 4]]))
        assert res.rref == qm([[1, 2], [0, 0]])
        assert res.rank == 1
        assert res.transform == qm([[1, 0], [-2, 1]])

    def test_prime_field(self):
        res = rref(F5, ((2, 1), (1, 3)))
        assert res.rank == 2
        assert mat_mul(F5, res.transform, ((2, 1), (1, 3))) == identity(F5, 2)

    def test_requires_field(self):
        from bcinv.linalg import IntegersMod

        with pytest.raises(ValueError):
            rref(IntegersMod(4), ((1, 2), (3, 0)))

    @settings(max_examples=60, deadline=None)
    @given(small_q_matrix(3, 4))
    def test_properties(self, m):
        res = rref(QQ, m)
        assert mat_mul(QQ, res.transform, m) == res.rref
        assert res.rank <= 3 and res.rank <= 4
        assert rref(QQ, res.rref).rref == res.rref  # idempotent
        assert inverse(QQ, res.transform) is not None


class TestSpaces:
    def test_null_space_example(self):
        ns = null_space(QQ, qm([[2, 0], [0, 0]]))
        assert ns.basis == qm([[0, 1]])
        assert ns.side is Side.NULL

    def test_column_space_of_zero(self):
        cs = column_space(QQ, qm([[0, 0], [0, 0]]))
        assert cs.basis == () and cs.dim == 0

    def test_row_space_example(self):
        rs = row_space(QQ, qm([[1, 2], [2, 4]]))
        assert rs.basis == qm([[1, 2]])

    @settings(max_examples=60, deadline=None)
    @given(small_q_matrix(3, 3))
    def test_rank_nullity(self, m):
        r = rref(QQ, m).rank
        assert null_space(QQ, m).dim == 3 - r
        assert column_space(QQ, m).dim == r
        assert row_space(QQ, m).dim == r
        assert left_null_space(QQ, m).dim == 3 - r

    def test_subset_and_direct_sum(self):
        e1 = linalg.SubspaceBasis(2, Side.COLUMN, qm([[1, 0]]))
        e2 = linalg.SubspaceBasis(2, Side.COLUMN, qm([[0, 1]]))
        full = linalg.SubspaceBasis(2, Side.COLUMN, qm([[1, 0], [0, 1]]))
        assert subspace_subset(QQ, e1, full)
        assert not subspace_subset(QQ, full, e1)
        assert subspace_direct_sum(QQ, e1, e2)
        assert not subspace_direct_sum(QQ, e1, full)
        assert subspace_intersection_trivial(QQ, e1, e2)

    def test_side_mismatch(self):
        col = linalg.SubspaceBasis(2, Side.COLUMN, qm([[1, 0]]))
        row = linalg.SubspaceBasis(2, Side.ROW, qm([[1, 0]]))
        with pytest.raises(DimensionMismatch):
            subspace_subset(QQ, col, row)
        with pytest.raises(DimensionMismatch):
            subspace_subset(QQ, col, linalg.SubspaceBasis(3, Side.COLUMN, ()))

    def test_null_compares_with_column(self):
        # the direct-sum tests in the backend mix NULL and COLUMN sides
        m = qm([[2, 0], [0, 0]])
        assert subspace_direct_sum(QQ, column_space(QQ, m), null_space(QQ, m))


class TestSolvers:
    @settings(max_examples=40, deadline=None)
    @given(small_q_matrix(3, 3), small_q_matrix(3, 2))
    def test_solve_right(self, a, x):
        b = mat_mul(QQ, a, x)
        sol = solve_right(QQ, a, b)
        assert sol is not None
        assert mat_mul(QQ, a, sol) == b

    def test_solve_right_unsolvable(self):
        assert solve_right(QQ, qm([[0, 0], [0, 0]]), qm([[1, 0], [0, 0]])) is None

    @settings(max_examples=40, deadline=None)
    @given(small_q_matrix(2, 3), small_q_matrix(2, 3))
    def test_solve_left(self, x, unused):
        a = qm([[1, 0, 1], [0, 1, 0], [2, 2, 2]])
        b = mat_mul(QQ, x, a)
        sol = solve_left(QQ, a, b)
        assert sol is not None
        assert mat_mul(QQ, sol, a) == b


class TestInnerInverses:
    def test_diag(self):
        m = qm([[2, 0], [0, 0]])
        g = inner_inverse(QQ, m)
        assert mat_mul(QQ, mat_mul(QQ, m, g), m) == m
        assert g == qm([["1/2", 0], [0, 0]])

    def test_identity_and_zero(self):
        assert inner_inverse(QQ, identity(QQ, 3)) == identity(QQ, 3)
        z = qm([[0, 0], [0, 0]])
        g = inner_inverse(QQ, z)
        assert mat_mul(QQ, mat_mul(QQ, z, g), z) == z

    def test_family_base_case(self):
        m = qm([[2, 0], [0, 0]])
        g0 = inner_inverse(QQ, m)
        z = qm([[0, 0], [0, 0]])
        assert inner_inverse_family(QQ, m, g0, s=z, t=z) == g0

    def test_family_identity_is_rigid(self):
        m = identity(QQ, 2)
        g0 = inner_inverse(QQ, m)
        s = qm([[1, 2], [3, 4]])
        t = qm([[0, 1], [1, 0]])
        assert inner_inverse_family(QQ, m, g0, s=s, t=t) == m

    def test_family_second_witness(self):
        m = qm([[2, 0], [0, 0]])
        g0 = inner_inverse(QQ, m)
        s = qm([[0, 0], [0, 1]])
        g = inner_inverse_family(QQ, m, g0, s=s)
        assert g != g0
        assert mat_mul(QQ, mat_mul(QQ, m, g), m) == m

    @settings(max_examples=40, deadline=None)
    @given(small_q_matrix(2, 3), small_q_matrix(3, 2), small_q_matrix(3, 2))
    def test_family_always_inner(self, m, s, t):
        g0 = inner_inverse(QQ, m)
        g = inner_inverse_family(QQ, m, g0, s=s, t=t)
        assert mat_mul(QQ, mat_mul(QQ, m, g), m) == m

    def test_second_inner_inverse(self):
        m = qm([[2, 0], [0, 0]])
        g0 = inner_inverse(QQ, m)
        g2 = second_inner_inverse(QQ, m, g0)
        assert g2 is not None and g2 != g0
        assert mat_mul(QQ, mat_mul(QQ, m, g2), m) == m
        assert second_inner_inverse(QQ, identity(QQ, 2), identity(QQ, 2)) is None

    def test_gf2_inner_inverse(self):
        m = ((1, 1), (0, 0))
        g = inner_inverse(F2, m)
        assert mat_mul(F2, mat_mul(F2, m, g), m) == m


class TestMatrixEquation:
    def test_solvable(self):
        a = qm([[1, 0], [0, 0]])
        c = qm([[3, 0], [0, 0]])
        x = matrix_equation_solvable(QQ, a, a, c)
        assert x is not None
        assert mat_mul(QQ, mat_mul(QQ, a, x), a) == c

    def test_unsolvable(self):
        a = qm([[1, 0], [0, 0]])
        c = qm([[0, 0], [0, 1]])
        assert matrix_equation_solvable(QQ, a, a, c) is None


def test_transpose():
    assert transpose(qm([[1, 2, 3], [4, 5, 6]])) == qm([[1, 4], [2, 5], [3, 6]])
