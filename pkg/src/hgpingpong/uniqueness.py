"""Why cone(u, v, w) is the only simplicial cone that works for n = 3.

Any valid cone must have u and v as generators, so the remaining freedom is
the third generator w' = lam*u + mu*v + eta*w.  This module computes, as
exact polynomials, the cone coordinates that rule out eta < 0, mu != 0 and
lam != 0, and runs a grid scan that pushes every (lam, mu, eta) through the
falsifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cones import SimplicialCone
from .errors import EmptyGrid
from .exact import inverse, matrix_power_poly, positively_parallel, rat, vneg
from .generators import build
from .multipoly import MultiPoly, cramer, variables
from .pingpong import U3, V3, W3, PingPongTable, Witness, falsify

lam, mu, eta, x, y, z, t = variables("lam mu eta x y z t")


def _mvec(v) -> list:
    return [MultiPoly.const(a) for a in v]


def _combo(*pairs) -> list:
    """sum of coefficient * vector, coefficients polynomial."""
    out = [MultiPoly() for _ in pairs[0][1]]
    for c, v in pairs:
        out = [o + c * MultiPoly.const(a) for o, a in zip(out, v)]
    return out


def third_generator(with_eta: bool = True) -> list:
    """w' = lam*u + mu*v + eta*w (eta = 1 when ``with_eta`` is False)."""
    e = eta if with_eta else MultiPoly.const(1)
    return _combo((lam, U3), (mu, V3), (e, W3))


def _apply(M, vecpoly) -> list:
    return [sum((MultiPoly.const(a) * p for a, p in zip(row, vecpoly)), MultiPoly()) for row in M.rows]


def symbolic_coords_TRt_v() -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """eta * (a, b, c) where (TR)^t v = a u + b v + c w'."""
    h = build(3)
    Mt = matrix_power_poly(h.T @ h.R)
    image = [sum((MultiPoly.const(c) * t ** k for k, c in enumerate(p.coeffs)), MultiPoly()) for p in Mt.apply(V3)]
    nums, den = cramer([_mvec(U3), _mvec(V3), third_generator()], image)
    return tuple(eta * n / den for n in nums)


def _coords_of_image(M) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    basis = [_mvec(U3), _mvec(V3), third_generator(with_eta=False)]
    q = [bu * x + bv * y + bw * z for bu, bv, bw in zip(*basis)]
    nums, den = cramer(basis, _apply(M, q))
    return tuple(n / den for n in nums)


def symbolic_coords_TR() -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """Coordinates of TR(x u + y v + z w') in the basis (u, v, w'), w' = lam u + mu v + w."""
    h = build(3)
    return _coords_of_image(h.T @ h.R)


def symbolic_coords_TRinv() -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """Same for T R^-1."""
    h = build(3)
    return _coords_of_image(h.T @ inverse(h.R))


def eta_sign_forced() -> bool:
    """True if, for large t, a > 0 while c has the sign of eta.

    With the eta-cleared coordinates, a*eta has leading term 2*eta*t^2 and
    c*eta = 4t, so a > 0 and sign(c) = sign(eta): a valid table needs eta > 0.
    """
    a, _, c = symbolic_coords_TRt_v()
    da, dc = a.degree("t"), c.degree("t")
    return (
        da > dc
        and a.coefficient("t", da) == 2 * eta
        and (c.coefficient("t", dc).constant() or 0) > 0
    )


@dataclass(frozen=True)
class GridSpec:
    lo: Fraction
    hi: Fraction
    step: Fraction

    @classmethod
    def of(cls, lo, hi, step) -> "GridSpec":
        return cls(rat(lo), rat(hi), rat(step))

    def values(self) -> list[Fraction]:
        if self.step <= 0:
            raise EmptyGrid("step must be positive")
        out, v = [], self.lo
        while v <= self.hi:
            out.append(v)
            v += self.step
        return out


@dataclass
class ObstructionReport:
    eta_sign_forced: bool
    mu_squared_coefficient: MultiPoly
    lambda_squared_coefficient: MultiPoly
    survivors: list = field(default_factory=list)
    falsified: dict = field(default_factory=dict)  # (lam, mu, eta) -> Witness

    def to_json(self) -> dict:
        return {
            "eta_sign_forced": self.eta_sign_forced,
            "mu_squared_coefficient": repr(self.mu_squared_coefficient),
            "lambda_squared_coefficient": repr(self.lambda_squared_coefficient),
            "survivors": [[str(c) for c in p] for p in self.survivors],
            "falsified": len(self.falsified),
            "witnesses": {
                ",".join(str(c) for c in p): w.to_json() for p, w in sorted(self.falsified.items())
            },
        }


def candidate_cone(lam_: Fraction, mu_: Fraction, eta_: Fraction) -> SimplicialCone:
    w = tuple(lam_ * a + mu_ * b + eta_ * c for a, b, c in zip(U3, V3, W3))
    return SimplicialCone((U3, V3, w))


def scan_points(points: Sequence[tuple]) -> tuple[list, dict]:
    h = build(3)
    survivors, falsified = [], {}
    for p in points:
        witness: Witness | None = falsify(PingPongTable.from_triple(h, candidate_cone(*p)))
        if witness is None:
            survivors.append(p)
        else:
            falsified[p] = witness
    return sorted(survivors), falsified


def uniqueness_scan(lam_grid: GridSpec, mu_grid: GridSpec, eta_grid: GridSpec) -> ObstructionReport:
    """Falsify every cone(u, v, lam u + mu v + eta w) on the grid (eta = 0 skipped)."""
    points = [
        (a, b, c)
        for a in lam_grid.values()
        for b in mu_grid.values()
        for c in eta_grid.values()
        if c != 0
    ]
    if not points:
        raise EmptyGrid("the grid contains no admissible point")
    survivors, falsified = scan_points(points)
    _, b, _ = symbolic_coords_TR()
    a_inv, _, _ = symbolic_coords_TRinv()
    return ObstructionReport(
        eta_sign_forced=eta_sign_forced(),
        mu_squared_coefficient=b.coefficient("z", 1),
        lambda_squared_coefficient=a_inv.coefficient("z", 1),
        survivors=survivors,
        falsified=falsified,
    )


def default_scan() -> ObstructionReport:
    g = GridSpec.of(-2, 2, Fraction(1, 2))
    return uniqueness_scan(g, g, g)


def eigen_generator_check(C: SimplicialCone) -> dict:
    """Do ±u and ±v occur among the generators (up to positive scaling)?"""

    def find(target):
        for g in C.generators:
            if positively_parallel(g, target):
                return 1
            if positively_parallel(g, vneg(target)):
                return -1
        return 0

    su, sv = find(U3), find(V3)
    return {"u": su, "v": sv, "contains_u_and_v": su != 0 and su == sv}
