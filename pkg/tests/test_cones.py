from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import int_matrices
from hgpingpong.cones import (
    MapKind,
    Membership,
    SimplicialCone,
    classify_orthant_map,
    closed_maps_into_sign,
    cone,
    cone_matrix,
    containment_witness,
    ge,
    gt,
    membership,
    sign_class,
    strict_feasible,
)
from hgpingpong.errors import DegenerateCone, SingularBasis
from hgpingpong.exact import RatMat


def simplex_points(n, steps=32):
    """Lattice points with positive coordinates summing to 1 (spacing 1/steps)."""
    for c in product(range(1, steps), repeat=n - 1):
        last = steps - sum(c)
        if last > 0:
            yield tuple(Fraction(v, steps) for v in c + (last,))


SIMPLEX3 = list(simplex_points(3))


def test_standard_cone_membership():
    C = cone((1, -2, 1), (1, 0, 3), (0, -1, 1))
    assert membership(C, (2, -3, 5)) is Membership.INTERIOR_PLUS
    assert membership(C, (-2, 3, -5)) is Membership.INTERIOR_MINUS
    assert membership(C, (1, -2, 1)) is Membership.BOUNDARY_PLUS
    assert membership(C, (1, 0, 0)) is Membership.OUTSIDE


def test_zero_vector_is_on_the_boundary():
    assert sign_class((0, 0, 0)) is Membership.BOUNDARY_PLUS


def test_cone_validation():
    with pytest.raises(DegenerateCone):
        cone((1, 0), (2, 0))
    with pytest.raises(DegenerateCone):
        cone((1, 0), (1, 2, 3))
    C = cone((1, 0, 0), (0, 1, 0))
    assert not C.is_full
    with pytest.raises(SingularBasis):
        C.basis_inverse


def test_cone_equality_ignores_order_and_scale():
    assert cone((1, 0), (0, 1)) == cone((0, 3), (2, 0))
    assert -cone((1, 0), (0, 1)) == cone((-1, 0), (0, -1))


def test_cone_matrix_for_rotation(h3):
    C = cone((1, -2, 1), (1, 0, 3), (0, -1, 1))
    assert cone_matrix(C, h3.R) == RatMat([[0, -1, 0], [-1, -2, -1], [0, 4, 1]])


def sampled_overlap(A) -> bool:
    for x in SIMPLEX3:
        if sign_class(A @ x).in_open:
            return True
    return False


@given(int_matrices(3, -3, 3))
def test_classification_against_simplex_sampler(rows):
    A = RatMat(rows)
    cls = classify_orthant_map(A)
    if cls.maps_into:
        assert all(sign_class(A @ x).in_open for x in SIMPLEX3)
    elif cls.kind is MapKind.DISJOINT:
        assert not sampled_overlap(A)
    else:
        x = cls.witness
        assert all(v > 0 for v in x) and sign_class(A @ x).in_open


@given(int_matrices(3, -3, 3))
def test_containment_witness_is_exact(rows):
    A = RatMat(rows)
    x = containment_witness(A)
    if x is None:
        assert classify_orthant_map(A).maps_into
    else:
        assert all(v > 0 for v in x)
        assert not sign_class(A @ x).in_open


def test_row_pair_certificate_on_known_matrix():
    cls = classify_orthant_map(RatMat([[0, -1, 0], [-1, -2, -1], [0, 4, 1]]))
    assert cls.kind is MapKind.DISJOINT
    assert (cls.row_plus, cls.row_minus) == (2, 0)


def test_fourier_motzkin_decides_disjointness_without_row_pair():
    # no row has a fixed sign, yet A x and x can never both be positive
    A = RatMat([[1, -1], [-1, 1]])
    cls = classify_orthant_map(A)
    assert cls.kind is MapKind.DISJOINT and cls.via == "fourier-motzkin"


coef = st.integers(-3, 3)
ineq = st.tuples(coef, coef, coef, st.booleans())


@given(st.lists(ineq, min_size=1, max_size=5))
def test_strict_feasible_against_grid(rows):
    system = [(gt if strict else ge)([p, q], r) for p, q, r, strict in rows]
    x = strict_feasible(system, 2)
    grid = [Fraction(i, 4) for i in range(-24, 25)]
    if x is not None:
        assert all(s.holds(x) for s in system)
    else:
        assert not any(all(s.holds((u, v)) for s in system) for u in grid for v in grid)


def test_closed_sign():
    assert closed_maps_into_sign(RatMat([[1, 0], [0, 2]])) == 1
    assert closed_maps_into_sign(RatMat([[-1, 0], [0, 0]])) == -1
    assert closed_maps_into_sign(RatMat([[1, -1], [0, 1]])) == 0


def test_open_and_closed_flags():
    C = SimplicialCone(((1, 0), (0, 1)), closed=True)
    assert C.contains((1, 0)) and not C.closure().contains((-1, 0))
    assert not cone((1, 0), (0, 1)).contains((1, 0))
