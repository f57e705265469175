from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import int_matrices, rationals
from hgpingpong.errors import DimensionMismatch, NotUnipotent, SingularMatrix
from hgpingpong.exact import (
    RatMat,
    UniPoly,
    charpoly,
    column_space_intersection,
    det,
    inverse,
    matrix_power_poly,
    nilpotency_index,
    nilpotent_exp,
    nullspace,
    poly_gcd,
    primitive,
    rank,
    rat,
    solve,
    unipotent_log,
)


def to_sympy(A: RatMat) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(a.numerator, a.denominator) for a in r] for r in A.rows])


def from_sympy(M) -> RatMat:
    return RatMat([[Fraction(int(sympy.numer(a)), int(sympy.denom(a))) for a in M.row(i)] for i in range(M.rows)])


@pytest.mark.parametrize("text,value", [("3", 3), ("-3/4", Fraction(-3, 4)), (" 6/8 ", Fraction(3, 4))])
def test_rat_parses_exact_literals(text, value):
    assert rat(text) == value


@pytest.mark.parametrize("bad", [0.5, "0.5", "1e3", "1/0"])
def test_rat_rejects_floats_and_garbage(bad):
    with pytest.raises((ValueError, ZeroDivisionError, TypeError)):
        rat(bad)


def test_primitive_scaling():
    assert primitive((Fraction(1, 2), Fraction(-3, 4), 0)) == (2, -3, 0)
    assert primitive((0, -6, 4)) == (0, -3, 2)


@given(int_matrices(3))
def test_det_rank_match_sympy(rows):
    A = RatMat(rows)
    S = sympy.Matrix(rows)
    assert det(A) == int(S.det())
    assert rank(A) == S.rank()


@given(int_matrices(3))
def test_inverse_matches_sympy(rows):
    A = RatMat(rows)
    if sympy.Matrix(rows).det() == 0:
        with pytest.raises(SingularMatrix):
            inverse(A)
        return
    assert inverse(A) == from_sympy(sympy.Matrix(rows).inv())
    assert A @ inverse(A) == RatMat.identity(3)


@given(int_matrices(4, -3, 3))
def test_charpoly_matches_sympy(rows):
    p = charpoly(RatMat(rows))
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.Matrix(rows).charpoly(x).as_expr(), x).all_coeffs()[::-1]
    assert [int(c) for c in p.coeffs] == [int(c) for c in expected]


@given(int_matrices(3), st.lists(rationals(), min_size=3, max_size=3))
def test_solve_roundtrip(rows, b):
    A = RatMat(rows)
    if rank(A) < 3:
        return
    x = solve(A, b)
    assert A @ x == tuple(b)


def test_solve_errors():
    with pytest.raises(SingularMatrix):
        solve(RatMat([[1, 2], [2, 4]]), (1, 1))
    with pytest.raises(DimensionMismatch):
        solve(RatMat([[1, 0], [0, 1]]), (1, 2, 3))


@given(int_matrices(3))
def test_nullspace_is_annihilated(rows):
    A = RatMat(rows)
    ker = nullspace(A)
    assert len(ker) == 3 - rank(A)
    for v in ker:
        assert all(c == 0 for c in A @ v)


def test_column_space_intersection_of_coordinate_planes():
    A = RatMat.from_columns([(1, 0, 0), (0, 1, 0)])
    B = RatMat.from_columns([(0, 1, 0), (0, 0, 1)])
    (v,) = column_space_intersection(A, B)
    assert primitive(v) in ((0, 1, 0), (0, -1, 0))


def test_unipoly_division_and_gcd():
    x = UniPoly([0, 1])
    p = (x - 1) * (x + 2)
    q, r = p.divmod(x - 1)
    assert q == x + 2 and r.is_zero()
    assert poly_gcd(p, (x - 1) * (x - 3)) == x - 1
    assert repr(UniPoly([1, 1, 1, 1])) == "x^3 + x^2 + x + 1"


def test_log_exp_roundtrip_on_a_jordan_block():
    J = RatMat([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    L = unipotent_log(J)
    assert nilpotency_index(L) == 3
    assert nilpotent_exp(L) == J


def test_log_rejects_non_unipotent():
    with pytest.raises(NotUnipotent):
        unipotent_log(RatMat([[2, 0], [0, 1]]))


@given(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2), st.integers(-6, 6))
def test_power_polynomial_agrees_with_repeated_products(a, b, c, t):
    M = RatMat([[1, a, b], [0, 1, c], [0, 0, 1]])
    Mt = matrix_power_poly(M)
    assert Mt(t) == M ** t


def _tr3():
    from hgpingpong.generators import build

    h = build(3)
    return h, matrix_power_poly(h.T @ h.R)


@pytest.mark.parametrize("q,sign", [((1, -1, 0), -1), ((1, -2, 1), 1), ((1, 0, 0), 1), ((-1, 0, 0), -1)])
def test_power_orbits_approach_the_eigenline(q, sign):
    from hgpingpong.exact import leading_direction

    _, TRt = _tr3()
    assert leading_direction(TRt, q).sign_along((1, -2, 1)) == sign


def test_inverse_orbits_approach_v():
    from hgpingpong.exact import leading_direction

    h, _ = _tr3()
    Mt = matrix_power_poly(h.T @ inverse(h.R))
    assert leading_direction(Mt, (1, 1, 1)).sign_along((1, 0, 3)) != 0


def test_four_dimensional_square_logs_meet_in_a_line():
    from hgpingpong.generators import build

    h = build(4)
    P = unipotent_log(h.T @ h.R)
    Q = unipotent_log(inverse(h.T) @ inverse(h.R))
    (v,) = column_space_intersection(P @ P, Q @ Q)
    assert primitive(v) in ((0, 1, -2, 1), (0, -1, 2, -1))
    assert len(column_space_intersection(RatMat.identity(3), RatMat.identity(3))) == 3
