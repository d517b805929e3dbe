from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tqftbench.exactlin import GF, QQ, CC, Matrix, field_from_name, inverse, kernel_basis, quotient_space, rank, solve

small_ints = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(rows):
    assert rank(Matrix(QQ, rows)) == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_plus_nullity(rows):
    m = Matrix(QQ, rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(x == 0 for x in (m @ Matrix.from_columns(QQ, [v], m.cols)).column(0))


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4), st.lists(small_ints, min_size=4, max_size=4))
def test_solve_consistent_systems(rows, x0):
    m = Matrix(QQ, rows)
    x0 = x0[: m.cols]
    rhs = (m @ Matrix.from_columns(QQ, [x0], m.cols)).column(0)
    x = solve(m, rhs)
    assert x is not None
    assert (m @ Matrix.from_columns(QQ, [x], m.cols)).column(0) == rhs


def test_solve_inconsistent():
    m = Matrix(QQ, [[1, 1], [2, 2]])
    assert solve(m, [1, 3]) is None


def test_inverse_round_trip():
    m = Matrix(QQ, [[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    inv = inverse(m)
    assert m @ inv == Matrix.identity(QQ, 3)
    expected = sympy.Matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]]).inv()
    assert all(inv.column(j)[i] == Fraction(str(expected[i, j])) for i in range(3) for j in range(3))


def test_singular_has_no_inverse():
    m = Matrix(QQ, [[1, 2], [2, 4]])
    assert not m.is_invertible()
    with pytest.raises(ZeroDivisionError):
        inverse(m)


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(Matrix(QQ, rows)) == 2
    assert rank(Matrix(GF(2), rows)) == 1
    assert rank(Matrix(GF(3), rows)) == 2


def test_prime_field_arithmetic():
    f = GF(5)
    assert f(3) * f(2) == f(1)
    assert f(1) / f(3) == f(2)
    assert f(-1) == f(4)
    with pytest.raises(ValueError):
        GF(6)


def test_quotient_space():
    q = quotient_space(3, [[1, -1, 0], [0, 1, -1]], QQ)
    assert q.dim == 1
    assert q.projection @ q.section == Matrix.identity(QQ, 1)
    assert all(x == 0 for x in (q.projection @ Matrix.from_columns(QQ, [[1, -1, 0]], 3)).column(0))


def test_kron_dimensions():
    a = Matrix(QQ, [[1, 2], [3, 4]])
    b = Matrix.identity(QQ, 3)
    k = a.kron(b)
    assert (k.rows, k.cols) == (6, 6)
    assert rank(k) == 6


def test_complex_field_tolerance():
    c = CC()
    assert c.is_zero(c(1 + 1e-12j) - c(1))
    assert rank(Matrix(c, [[1, 1], [1, 1 + 1e-12]])) == 1


def test_field_names():
    assert field_from_name("Q") is QQ
    assert field_from_name("F3") == GF(3)
    with pytest.raises(ValueError):
        field_from_name("R")
