import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weilcanon.fplinear import FpMatrix, vec_add, vec_neg, vec_scale, vec_sub


def square_matrix(p, d):
    entry = st.integers(min_value=0, max_value=p - 1)
    return st.lists(st.lists(entry, min_size=d, max_size=d),
                    min_size=d, max_size=d).map(
                        lambda rows: FpMatrix.from_rows(p, rows))


def test_identity_and_multiplication():
    ident = FpMatrix.identity(5, 3)
    m = FpMatrix.from_rows(5, [[1, 2, 0], [0, 1, 4], [3, 0, 1]])
    assert ident * m == m
    assert m * ident == m


def test_det_and_inverse():
    m = FpMatrix.from_rows(7, [[2, 1], [5, 3]])
    assert m.det() == 1
    assert m * m.inverse() == FpMatrix.identity(7, 2)
    singular = FpMatrix.from_rows(7, [[1, 2], [2, 4]])
    assert singular.det() == 0
    with pytest.raises(ValueError):
        singular.inverse()


def test_rref_pivots():
    m = FpMatrix.from_rows(3, [[0, 1, 2], [0, 2, 2]])
    reduced, rank, pivots = m.rref()
    assert rank == 2
    assert pivots == (1, 2)
    assert reduced == FpMatrix.from_rows(3, [[0, 1, 0], [0, 0, 1]])


def test_solve_and_kernel():
    m = FpMatrix.from_rows(5, [[1, 2], [3, 1]])
    b = FpMatrix.from_rows(5, [[4], [2]])
    x = m.solve(b)
    assert m * x == b
    singular = FpMatrix.from_rows(5, [[1, 2], [2, 4]])
    basis = singular.kernel_basis()
    assert len(basis) == 1
    assert singular.apply(basis[0]) == (0, 0)
    assert singular.solve(FpMatrix.from_rows(5, [[1], [0]])) is None


@given(square_matrix(5, 3), square_matrix(5, 3))
@settings(max_examples=40)
def test_det_multiplicative(a, b):
    assert (a * b).det() == a.det() * b.det() % 5


@given(square_matrix(3, 3))
@settings(max_examples=40)
def test_rref_idempotent(m):
    reduced, rank, pivots = m.rref()
    again, rank2, pivots2 = reduced.rref()
    assert again == reduced and rank2 == rank and pivots2 == pivots


def test_vector_helpers():
    assert vec_add(5, (1, 4), (2, 3)) == (3, 2)
    assert vec_sub(5, (1, 0), (2, 3)) == (4, 2)
    assert vec_neg(5, (1, 4)) == (4, 1)
    assert vec_scale(5, 3, (1, 4)) == (3, 2)
