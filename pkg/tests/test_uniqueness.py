from fractions import Fraction

import pytest
import sympy

from hgpingpong.errors import EmptyGrid
from hgpingpong.pingpong import U3, V3, W3
from hgpingpong.uniqueness import (
    GridSpec,
    candidate_cone,
    eigen_generator_check,
    eta_sign_forced,
    scan_points,
    symbolic_coords_TR,
    symbolic_coords_TRinv,
    symbolic_coords_TRt_v,
    uniqueness_scan,
)

L, M, E, X, Y, Z, t = sympy.symbols("lam mu eta x y z t")
R = sympy.Matrix([[0, 0, -1], [1, 0, -1], [0, 1, -1]])
T = sympy.Matrix([[-1, 0, 0], [2, 1, 0], [-4, 0, 1]])
u, v, w = (sympy.Matrix(g) for g in (U3, V3, W3))


def to_sympy(p):
    out = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for name, e in mono:
            term *= sympy.Symbol(name) ** e
        out += term
    return sympy.expand(out)


def sympy_coords(target, basis):
    a, b, c = sympy.symbols("a b c")
    B = sympy.Matrix.hstack(*basis)
    sol = sympy.solve(list(B * sympy.Matrix([a, b, c]) - target), [a, b, c], dict=True)[0]
    return [sympy.simplify(sol[s]) for s in (a, b, c)]


def test_power_orbit_coordinates_match_sympy():
    TR = T * R
    N = TR - sympy.eye(3)
    # TR is unipotent: (TR)^t = sum binom(t, k) N^k
    TRt = sympy.eye(3) + t * N + t * (t - 1) / 2 * N ** 2
    expected = sympy_coords(TRt * v, [u, v, L * u + M * v + E * w])
    ours = symbolic_coords_TRt_v()
    for mine, ref in zip(ours, expected):
        assert sympy.simplify(to_sympy(mine) - E * ref) == 0


def test_power_orbit_coordinates_closed_form():
    a, b, c = (to_sympy(p) for p in symbolic_coords_TRt_v())
    assert sympy.expand(a - (2 * E * t ** 2 - 4 * L * t)) == 0
    assert sympy.expand(b - (E - 4 * M * t)) == 0
    assert sympy.expand(c - 4 * t) == 0


@pytest.mark.parametrize("maker,matrix", [(symbolic_coords_TR, T * R), (symbolic_coords_TRinv, T * R.inv())])
def test_image_coordinates_match_sympy(maker, matrix):
    wp = L * u + M * v + w
    q = X * u + Y * v + Z * wp
    expected = sympy_coords(matrix * q, [u, v, wp])
    for mine, ref in zip(maker(), expected):
        assert sympy.simplify(to_sympy(mine) - ref) == 0


def test_obstruction_monomials():
    _, b, _ = symbolic_coords_TR()
    a_inv, _, _ = symbolic_coords_TRinv()
    assert to_sympy(b.coefficient("z", 1)).coeff(M, 2) == -4
    assert to_sympy(a_inv.coefficient("z", 1)).coeff(L, 2) == -4
    assert eta_sign_forced()


def test_small_scan_keeps_only_the_standard_cone():
    g = GridSpec.of(-1, 1, 1)
    rep = uniqueness_scan(g, g, g)
    assert rep.survivors == [(0, 0, 1)]
    assert len(rep.falsified) == 9 * 2 - 1
    assert all(w.recheck() for w in rep.falsified.values())
    assert rep.to_json()["falsified"] == 17


def test_scaled_third_generator_survives():
    survivors, falsified = scan_points([(0, 0, Fraction(7, 3)), (0, Fraction(1, 3), 1)])
    assert survivors == [(0, 0, Fraction(7, 3))]
    assert list(falsified) == [(0, Fraction(1, 3), 1)]


def test_grid_errors():
    with pytest.raises(EmptyGrid):
        GridSpec.of(0, 1, 0).values()
    with pytest.raises(EmptyGrid):
        uniqueness_scan(GridSpec.of(0, 0, 1), GridSpec.of(0, 0, 1), GridSpec.of(0, 0, 1))


def test_eigen_generators_present():
    assert eigen_generator_check(candidate_cone(1, 1, 1))["contains_u_and_v"]
    assert eigen_generator_check(candidate_cone(0, 0, -1))["u"] == 1
