"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are collected and shown in an "acceptance criteria" section at the
end of every pytest run that includes this file.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from hgpingpong.cases import (
    BT_DISPLAYED,
    U2,
    V2,
    bt_vector_report,
    build_bt,
    search_fourth_generator,
    verify_2d_case,
    verify_bt_table,
    verify_s_conjugation,
)
from hgpingpong.cli import main
from hgpingpong.exact import (
    RatMat,
    column_space_intersection,
    inverse,
    matrix_power_poly,
    primitive,
    rank,
    unipotent_log,
)
from hgpingpong.generators import build
from hgpingpong.pingpong import PingPongTable, standard_cone, verify
from hgpingpong.projection import (
    PlanePoint,
    act2d,
    circle_invariance_identity,
    closed_forms,
    fig2,
    phi,
    project,
    q1q2_obstruction,
)
from hgpingpong.uniqueness import (
    default_scan,
    symbolic_coords_TR,
    symbolic_coords_TRinv,
    symbolic_coords_TRt_v,
    t,
)
from hgpingpong.uniqueness import eta as ETA
from hgpingpong.uniqueness import lam as LAM
from hgpingpong.uniqueness import mu as MU
from hgpingpong.words import count_by_recurrence, injectivity_check

F = Fraction


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    ACCEPTANCE_LINES.append(line)
    print(line, flush=True)
    assert ok, line


def test_criterion_1_three_dimensional_table(tmp_path):
    path = tmp_path / "verify.json"
    exit_code = main(["verify", "--n", "3", "--json", str(path)])
    verdict = verify(PingPongTable.from_triple(build(3), standard_cone()))
    mats = {str(c.word): c.matrix for c in verdict.checks}
    displayed = {
        "R": [[0, -1, 0], [-1, -2, -1], [0, 4, 1]],
        "R^2": [[1, 2, 1], [2, 1, 1], [-4, -4, -3]],
        "R^3": [[-2, -1, -1], [-1, 0, 0], [4, 0, 1]],
        "TR": [[1, 2, 1], [0, 1, 0], [0, 4, 1]],
        "TR^2": [[-2, -1, -1], [-1, -2, -1], [-4, -4, -3]],
        "TR^3": [[1, 0, 0], [2, 1, 1], [4, 0, 1]],
    }
    ok = exit_code == 0 and verdict.valid and all(mats[w] == RatMat(m) for w, m in displayed.items())
    report(1, "n=3 cone table valid; six coordinate systems equal the displayed solutions", ok)


def test_criterion_2_logarithm_calculus():
    h = build(3)
    TR, TRinv = h.T @ h.R, h.T @ inverse(h.R)
    P, Q = unipotent_log(TR), unipotent_log(TRinv)
    half = F(1, 2)
    P_shown = RatMat([[-3 * half, -half, half], [2, 0, -2], [-half, half, 3 * half]])
    TR_t2 = RatMat([[half, half, half], [-1, -1, -1], [half, half, half]])
    Q_shown = RatMat([[-3 * half, -half, half], [-3, 1, 1], [-3 * half, -5 * half, half]])
    TRinv_t2 = RatMat([[3 * half, -half, -half], [0, 0, 0], [9 * half, -3 * half, -3 * half]])
    A, B = matrix_power_poly(TR), matrix_power_poly(TRinv)
    expansions = (
        A.degree == 2 and A.coefficient(0) == RatMat.identity(3) and A.coefficient(1) == P_shown
        and A.coefficient(2) == TR_t2
        and B.degree == 2 and B.coefficient(0) == RatMat.identity(3) and B.coefficient(1) == Q_shown
        and B.coefficient(2) == TRinv_t2
    )
    inter = column_space_intersection(P, Q)
    line_ok = len(inter) == 1 and primitive(inter[0]) in ((0, -1, 1), (0, 1, -1))
    ok = P == P_shown and expansions and rank(P) == 2 and rank(Q) == 2 and line_ok
    report(2, "log(TR), (TR)^t and (TR^-1)^t expansions, ranks, col(P) ∩ col(Q) = <(0,-1,1)>", ok)


def test_criterion_3_symbolic_core():
    _, b, _ = symbolic_coords_TR()
    a_inv, _, _ = symbolic_coords_TRinv()
    mu_term = b.coeff_of({"mu": 2, "z": 1}) == -4
    lam_term = a_inv.coeff_of({"lam": 2, "z": 1}) == -4
    a, bb, c = symbolic_coords_TRt_v()
    orbit = (
        a == 2 * ETA * t ** 2 - 4 * LAM * t
        and bb == ETA - 4 * MU * t
        and c == 4 * t
    )
    report(3, "-4 mu^2 z in b, -4 lam^2 z in a', eta-cleared (TR)^t v coordinates", mu_term and lam_term and orbit)


def test_criterion_4_uniqueness_scan():
    start = time.perf_counter()
    rep = default_scan()
    elapsed = time.perf_counter() - start
    expected = [(0, 0, F(k, 2)) for k in range(1, 5)]
    rechecked = all(w.recheck() for w in rep.falsified.values())
    total = 9 * 9 * 8
    ok = rep.survivors == expected and rechecked and len(rep.falsified) + len(expected) == total and elapsed < 60
    report(4, "grid survivors are exactly lam=mu=0, eta>0; every witness rechecks", ok,
           f"{len(rep.falsified)} falsified, {elapsed:.1f}s")


def _random_point(rng: random.Random) -> tuple:
    return tuple(F(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(3))


def test_criterion_5_projection():
    h = build(3)
    rng = random.Random(20261015)
    values_ok = [project(s) for s in ((1, -2, 1), (1, 0, 3), (0, -1, 1))] == [
        PlanePoint.of(0, 1), PlanePoint.of(1, 0), PlanePoint.of(1, 1)
    ]
    semi_ok = True
    for g, M in (("R", h.R), ("T", h.T)):
        done = 0
        while done < 500:
            s = _random_point(rng)
            img = M @ s
            if phi(s) == 0 or phi(img) == 0:
                continue
            p = project(s)
            if g == "T" and 2 * p.a + 2 * p.b == 3:
                continue
            semi_ok &= project(img) == act2d(g, p)
            done += 1
    circle_ok = circle_invariance_identity()["T_identity"]
    fig = fig2()
    fig_ok = all(p.norm2() == 1 for seq in fig.sequences.values() for p in seq)
    report(5, "rho(u,v,w); semiconjugacy on 500 points each for R and T; circle identity; fig2 on circle",
           values_ok and semi_ok and circle_ok and fig_ok)


def test_criterion_6_planar_obstruction():
    grid = [F(k, 4) for k in range(13)]
    checked, ok = 0, True
    for l1 in grid:
        for l2 in grid:
            if (l1, l2) == (0, 0) or l1 == F(3, 2):
                continue
            rep = q1q2_obstruction(l1, l2)
            ok &= (rep.a, rep.b, rep.c, rep.d) == closed_forms(l1, l2)
            ok &= (rep.b > 0) != (rep.d > 0) and rep.b != 0 and rep.d != 0
            checked += 1
    report(6, "(a,b,c,d) equal the closed forms and sign(b) = -sign(d) on [0,3]^2 step 1/4", ok,
           f"{checked} points")


def test_criterion_7_reduced_words():
    rep3 = injectivity_check(build(3), 10)
    expected3 = sum(count_by_recurrence(3, 1, n) for n in range(11))
    rep2 = injectivity_check(build(2), 8, exp_bound=3)
    expected2 = sum(count_by_recurrence(2, 6, n) for n in range(9))
    ok = rep3.ok and rep3.checked == expected3 and rep2.ok and rep2.checked == expected2
    report(7, "no collision or identity: n=3 up to length 10, n=2 (|e|<=3) up to length 8", ok,
           f"{rep3.checked} and {rep2.checked} words")


def test_criterion_8_four_dimensional_data():
    data = build_bt()
    rep = bt_vector_report(data)
    literal = all(rep[k]["exact"] for k in ("x", "Px", "Qx"))
    # the remaining displayed generators are the computed vectors divided by 12
    scaled = all(rep[k]["scale"] == "12" for k in ("P2x", "P3x", "Q3x"))
    rays = all(rep[k]["positive_multiple"] for k in BT_DISPLAYED)
    fixed = rep["P3x_fixed_by_TR"] and rep["Q3x_fixed_by_TinvRinv"]
    s_ok = verify_s_conjugation()["scalar"] == "5/12"
    v2 = verify_2d_case()
    h2 = build(2)
    eig_ok = (h2.T @ h2.R) @ U2 == U2 and (inverse(h2.T) @ inverse(h2.R)) @ V2 == V2
    ok = literal and scaled and rays and fixed and s_ok and v2.valid and eig_ok
    report(8, "n=4 vectors (x, Px, Qx literal; P^2x, P^3x, Q^3x as exact rays), fixed vectors, "
              "S v0 = (5/12) x, n=2 table valid", ok, "P^2x, P^3x, Q^3x computed = 12 x displayed")


def test_criterion_9_four_dimensional_verification():
    data = build_bt()
    table = verify_bt_table(data)
    closed_ok = table["T_Cplus_in_Cplus"]["passed"] and table["Tinv_Cminus_in_Cminus"]["passed"]
    start = time.perf_counter()
    smoke = search_fourth_generator(2, data=data)
    smoke_time = time.perf_counter() - start
    start = time.perf_counter()
    full = search_fourth_generator(5, data=data)
    full_time = time.perf_counter() - start
    ok = closed_ok and not smoke["survivors"] and smoke_time < 30 and not full["survivors"] and full_time < 600
    report(9, "T C+ ⊆ C+ and T^-1 C- ⊆ C- (closed); no fourth generator in [-2,2]^4 or [-5,5]^4", ok,
           f"smoke {smoke_time:.1f}s, full {full['distinct_rays_tested']} rays in {full_time:.0f}s")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
