"""The n = 2 and n = 4 comparison cases.

n = 2: the cone spanned by the eigenvectors of TR and T^-1 R^-1.
n = 4: the four cones ±C+, ±C- with C+ = cone(x, Px, P^2x, P^3x) and
C- = cone(x, Qx, Q^2x, Q^3x) with P = log(TR), Q = log(T^-1 R^-1) and
x = (0, 7, -2, 7).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cones import (
    SimplicialCone,
    classify_orthant_map,
    closed_maps_into_sign,
    ge,
    gt,
    maps_into_sign,
    sign_class,
    strict_feasible,
)
from .errors import DegenerateCone, EmptyGrid
from .exact import (
    RatMat,
    inverse,
    matrix_power_poly,
    nilpotency_index,
    nullspace,
    primitive,
    rank,
    unipotent_log,
    vec,
)
from .generators import HGTriple, build
from .pingpong import PingPongTable, Verdict, first_failing_power, verify

BT_X = vec((0, 7, -2, 7))
BT_S = RatMat([[0, 0, 0, 1], [-5, 5, 1, -3], [5, -5, -2, 3], [0, 5, 1, -1]])
BT_V0 = vec((0, 1, Fraction(-25, 12), 0))

# vectors as displayed for the n = 4 case
BT_DISPLAYED = {
    "x": (0, 7, -2, 7),
    "Px": (-5, 9, -15, 11),
    "P2x": (0, 1, -2, 1),
    "P3x": (-1, 3, -3, 1),
    "Qx": (5, 16, -10, 14),
    "Q3x": (1, 2, -2, 4),
}


@dataclass(frozen=True)
class FourConeData:
    h: HGTriple
    P: RatMat
    Q: RatMat
    x: tuple
    Cplus: SimplicialCone
    Cminus: SimplicialCone
    S: RatMat

    def vectors(self) -> dict[str, tuple]:
        P, Q, x = self.P, self.Q, self.x
        return {
            "x": x,
            "Px": P @ x,
            "P2x": P @ (P @ x),
            "P3x": P @ (P @ (P @ x)),
            "Qx": Q @ x,
            "Q2x": Q @ (Q @ x),
            "Q3x": Q @ (Q @ (Q @ x)),
        }


def build_bt() -> FourConeData:
    h = build(4)
    P = unipotent_log(h.T @ h.R)
    Q = unipotent_log(inverse(h.T) @ inverse(h.R))
    x = BT_X
    Cplus = SimplicialCone(tuple((P ** k) @ x for k in range(4)))
    Cminus = SimplicialCone(tuple((Q ** k) @ x for k in range(4)))
    return FourConeData(h, P, Q, x, Cplus, Cminus, BT_S)


def _scalar_multiple(a, b) -> Fraction | None:
    """c with a = c*b, or None."""
    k = next((i for i, v in enumerate(b) if v != 0), None)
    if k is None:
        return None
    c = a[k] / b[k]
    return c if all(ai == c * bi for ai, bi in zip(a, b)) else None


def bt_vector_report(data: FourConeData | None = None) -> dict:
    """Compare computed vectors with the displayed ones.

    ``scale`` is the exact factor c > 0 with computed = c * displayed.
    """
    data = data or build_bt()
    vs = data.vectors()
    h = data.h
    TR = h.T @ h.R
    TinvRinv = inverse(h.T) @ inverse(h.R)
    out = {}
    for name, shown in BT_DISPLAYED.items():
        c = _scalar_multiple(vs[name], vec(shown))
        out[name] = {
            "computed": [str(a) for a in vs[name]],
            "displayed": [str(a) for a in shown],
            "scale": None if c is None else str(c),
            "exact": c == 1,
            "positive_multiple": c is not None and c > 0,
        }
    out["P2x_equals_Q2x"] = vs["P2x"] == vs["Q2x"]
    out["P3x_fixed_by_TR"] = TR @ vs["P3x"] == vs["P3x"]
    out["Q3x_fixed_by_TinvRinv"] = TinvRinv @ vs["Q3x"] == vs["Q3x"]
    out["P_nilpotency_index"] = nilpotency_index(data.P)
    out["Q_nilpotency_index"] = nilpotency_index(data.Q)
    out["rank_P2"] = rank(data.P @ data.P)
    out["rank_Q2"] = rank(data.Q @ data.Q)
    return out


def _conj(target: SimplicialCone, M: RatMat, source: SimplicialCone) -> RatMat:
    return target.basis_inverse @ M @ source.basis


def _closed_self_map(C: SimplicialCone, M: RatMat) -> dict:
    A = _conj(C, M, C)
    if closed_maps_into_sign(A) == 1:
        return {"passed": True, "path": "entrywise-nonnegative", "cone_matrix": A.tolist()}
    # closed containment fails iff some generator image has a negative coordinate;
    # confirm with an exact feasibility search over x >= 0
    n = A.ncols
    for row in A.rows:
        system = [ge([1 if j == k else 0 for j in range(n)]) for k in range(n)]
        system.append(gt([-a for a in row]))
        x = strict_feasible(system, n)
        if x is not None:
            return {"passed": False, "path": "fourier-motzkin", "cone_matrix": A.tolist(), "witness": [str(v) for v in x]}
    return {"passed": True, "path": "fourier-motzkin", "cone_matrix": A.tolist()}


def verify_bt_table(data: FourConeData | None = None, powers=(1, 2, 3)) -> dict:
    """Check the four-cone table X = ±C+ ∪ ±C-, Y = R X ∪ ... ∪ R^4 X."""
    data = data or build_bt()
    h = data.h
    R, T = h.R, h.T
    Tinv = inverse(T)
    halves = {"C+": data.Cplus, "C-": data.Cminus}
    report: dict = {}

    report["R5_is_identity"] = R ** 5 == RatMat.identity(4)
    report["T_Cplus_in_Cplus"] = _closed_self_map(data.Cplus, T)
    report["Tinv_Cminus_in_Cminus"] = _closed_self_map(data.Cminus, Tinv)

    # T^k R^i (±C^s) ⊆ ±C+ and T^-k R^i (±C^s) ⊆ ±C-
    containment = []
    T_family = matrix_power_poly(T, var="k")
    for sign, target_name in ((1, "C+"), (-1, "C-")):
        target = halves[target_name]
        for src_name, src in halves.items():
            for i in range(1, 5):
                Ri = R ** i
                per_k = {}
                for k in powers:
                    A = _conj(target, (T if sign > 0 else Tinv) ** k @ Ri, src)
                    per_k[str(sign * k)] = maps_into_sign(A) != 0
                family = target.basis_inverse @ T_family @ (Ri @ src.basis)
                all_k = first_failing_power(family, sign) is None
                containment.append({
                    "source": src_name,
                    "i": i,
                    "target": target_name,
                    "powers": per_k,
                    "all_powers": all_k,
                    "passed": all(per_k.values()) and all_k,
                })
    report["containment"] = containment

    # X ∩ R^i X = ∅ for the four-cone union: C^a ∩ ±R^i C^b = ∅ for all a, b
    disjoint = []
    for (a_name, a), (b_name, b) in itertools.product(halves.items(), repeat=2):
        for i in range(1, 5):
            cls = classify_orthant_map(_conj(a, R ** i, b))
            disjoint.append({"cone": a_name, "image_of": b_name, "i": i, "class": cls.to_json(), "passed": cls.disjoint})
    report["disjointness"] = disjoint

    report["valid"] = (
        report["R5_is_identity"]
        and report["T_Cplus_in_Cplus"]["passed"]
        and report["Tinv_Cminus_in_Cminus"]["passed"]
        and all(c["passed"] for c in containment)
        and all(d["passed"] for d in disjoint)
    )
    return report


def verify_s_conjugation(v0=BT_V0, x=BT_X) -> dict:
    """Is x a positive multiple of S v0?"""
    image = BT_S @ vec(v0)
    c = _scalar_multiple(vec(x), image)
    return {
        "S_v0": [str(a) for a in image],
        # x = c * S v0, so S v0 = (1/c) x
        "scalar": None if c is None or c == 0 else str(1 / c),
        "positive_multiple": c is not None and c > 0,
    }


def search_fourth_generator(bound: int = 5, step: int = 1, data: FourConeData | None = None) -> dict:
    """Try every integer y in [-bound, bound]^4 as fourth generator of
    cone(P^3x, Q^3x, P^2x, y) and run the single-cone ping-pong verifier."""
    if bound < 0 or step <= 0:
        raise EmptyGrid("need bound >= 0 and step > 0")
    data = data or build_bt()
    vs = data.vectors()
    fixed = [primitive(vs["P3x"]), primitive(vs["Q3x"]), primitive(vs["P2x"])]
    h = data.h
    values = range(-bound, bound + 1, step)
    survivors, skipped, tested = [], 0, 0
    seen_rays = set()
    for y in itertools.product(values, repeat=4):
        if not any(y):
            skipped += 1
            continue
        ray = primitive(vec(y))
        if ray in seen_rays:
            # same cone as an earlier candidate
            continue
        seen_rays.add(ray)
        try:
            C = SimplicialCone(tuple(fixed) + (vec(y),))
        except DegenerateCone:
            skipped += 1
            continue
        tested += 1
        if verify(PingPongTable.from_triple(h, C), stop_early=True, with_witness=False).valid:
            survivors.append(tuple(int(a) for a in ray))
    return {
        "bound": bound,
        "step": step,
        "distinct_rays_tested": tested,
        "skipped_non_simplicial": skipped,
        "survivors": sorted(survivors),
    }


U2 = (-1, 1)
V2 = (1, 2)


def circle_directions(count: int = 360) -> list[tuple]:
    """``count`` exact rational points on the unit circle, spread over all directions.

    Uses (1-s^2, 2s)/(1+s^2) for evenly spaced s in [-1, 1) (half the circle)
    together with the antipodes.
    """
    half = count // 2
    out = []
    for j in range(half):
        # s = tan(theta/2) over theta in [-90°, 90°)
        s = Fraction(2 * j - half, half)
        d = 1 + s * s
        p = ((1 - s * s) / d, 2 * s / d)
        out.append(p)
        out.append((-p[0], -p[1]))
    return out


def verify_2d_case(directions: int = 360) -> Verdict:
    h = build(2)
    C = SimplicialCone((U2, V2))
    verdict = verify(PingPongTable.from_triple(h, C))
    TR = h.T @ h.R
    TinvRinv = inverse(h.T) @ inverse(h.R)
    cones = [C.basis] + [(h.R ** i) @ C.basis for i in (1, 2)]
    inverses = [inverse(B) for B in cones]
    uncovered = []
    dirs = circle_directions(directions)
    for d in dirs:
        if not any(sign_class(Binv @ d).in_closure for Binv in inverses):
            uncovered.append([str(a) for a in d])
    verdict.extra.update({
        "u_fixed_by_TR": TR @ vec(U2) == vec(U2),
        "v_fixed_by_TinvRinv": TinvRinv @ vec(V2) == vec(V2),
        "directions_checked": len(dirs),
        "uncovered_directions": uncovered,
        "closure_covers_plane": not uncovered,
    })
    return verdict


def eigenvector_line(M: RatMat) -> tuple:
    """Primitive spanning vector of the 1-dimensional fixed space of M."""
    ker = nullspace(M - RatMat.identity(M.nrows))
    if len(ker) != 1:
        raise ValueError(f"fixed space has dimension {len(ker)}")
    return primitive(ker[0])

