"""The hypergeometric triples (R_n, U_n, T_n) with alpha = (1/(n+1), ..., n/(n+1)), beta = 0."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InvalidOrder
from .exact import RatMat, UniPoly, charpoly, inverse, poly_gcd, rank


def companion(poly: UniPoly) -> RatMat:
    """Companion matrix of a monic polynomial: ones on the subdiagonal,
    last column ``-c_0, ..., -c_{n-1}``."""
    if poly.leading != 1:
        raise ValueError("companion matrix needs a monic polynomial")
    n = poly.degree
    rows = []
    for i in range(n):
        row = [1 if j == i - 1 else 0 for j in range(n - 1)]
        row.append(-poly.coeffs[i])
        rows.append(row)
    return RatMat(rows)


def cyclotomic_sum(n: int) -> UniPoly:
    """1 + x + ... + x^n."""
    return UniPoly([1] * (n + 1))


def unipotent_poly(n: int) -> UniPoly:
    """(x - 1)^n."""
    return UniPoly([-1, 1]) ** n


@dataclass(frozen=True)
class HGTriple:
    n: int
    R: RatMat
    U: RatMat
    T: RatMat

    @property
    def rotation_order(self) -> int:
        return self.n + 1


def build(n: int) -> HGTriple:
    """Build R_n, U_n and T_n = U_n R_n^-1."""
    if not isinstance(n, int) or n < 2:
        raise InvalidOrder(f"n must be an integer >= 2, got {n!r}")
    R = companion(cyclotomic_sum(n))
    U = companion(unipotent_poly(n))
    T = U @ inverse(R)
    return HGTriple(n, R, U, T)


def u_last_column(n: int) -> list[int]:
    """Last column of U_n: entry in (1-based) row i is (-1)^(n-i) C(n, n-i+1)."""
    return [(-1) ** (n - i) * comb(n, n - i + 1) for i in range(1, n + 1)]


def validate(h: HGTriple) -> dict[str, bool]:
    """Check the structural properties of a hypergeometric triple."""
    n = h.n
    identity = RatMat.identity(n)
    chi_R = charpoly(h.R)
    chi_U = charpoly(h.U)
    try:
        t_is_u_rinv = h.T == h.U @ inverse(h.R)
    except ValueError:
        t_is_u_rinv = False
    return {
        "T_equals_U_Rinv": t_is_u_rinv,
        "rank_T_minus_I_is_1": rank(h.T - identity) == 1,
        "charpoly_R": chi_R == cyclotomic_sum(n),
        "charpoly_U": chi_U == unipotent_poly(n),
        "no_shared_eigenvalue": poly_gcd(chi_R, chi_U).degree == 0,
    }


def matrix_order(M: RatMat, bound: int = 64) -> int | None:
    """Multiplicative order of M by explicit powering, or None if above ``bound``."""
    identity = RatMat.identity(M.nrows)
    P = M
    for k in range(1, bound + 1):
        if P == identity:
            return k
        P = P @ M
    return None
