"""The planar picture for n = 3.

Lines through the origin of Q^3 off the plane x - y + z = 0 are sent to the
chart phi = 1 and written in coordinates (a, b).  R acts there as a quarter
turn and T as a linear fractional map; both preserve the unit circle.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import OnProjectionHorizon, TPoleHit, ThetaZero
from .exact import RatMat, UniPoly, inverse, matrix_power_poly, rat, solve, vec
from .generators import build
from .multipoly import MultiPoly, variables
from .pingpong import U3, V3, W3

_a, _b = variables("a b")


@dataclass(frozen=True)
class PlanePoint:
    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a, b) -> "PlanePoint":
        return cls(rat(a), rat(b))

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"

    def norm2(self) -> Fraction:
        return self.a * self.a + self.b * self.b


def phi(s: Sequence) -> Fraction:
    x, y, z = vec(s)
    return x - y + z


def project(s: Sequence) -> PlanePoint:
    x, y, z = vec(s)
    f = x - y + z
    if f == 0:
        raise OnProjectionHorizon(f"{tuple(map(str, (x, y, z)))} has x - y + z = 0")
    return PlanePoint(-2 * (x - z) / f, -2 * y / f)


def unproject(p: PlanePoint) -> tuple:
    """The representative with x - y + z = 1 of the line over p."""
    a, b = p
    half = Fraction(1, 2)
    return (-a / 4 - b / 4 + half, -b / 2, a / 4 - b / 4 + half)


def act2d(g: str, p: PlanePoint) -> PlanePoint:
    """Planar action of "R", "R^-1" or "T" (T is its own inverse)."""
    a, b = p
    if g == "R":
        return PlanePoint(b, -a)
    if g == "R^-1":
        return PlanePoint(-b, a)
    if g == "T":
        d = 2 * a + 2 * b - 3
        if d == 0:
            raise TPoleHit(f"T is undefined at {p}")
        return PlanePoint((2 * a + b - 2) / d, (a + 2 * b - 2) / d)
    raise ValueError(f"unknown generator {g!r}")


def act_word(word: Sequence[str], p: PlanePoint) -> PlanePoint:
    """Apply letters right to left, as for matrices: act_word(["T", "R"], p) = T(R(p))."""
    for g in reversed(word):
        p = act2d(g, p)
    return p


def _t_action_polys() -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """Numerators and common denominator of T(a, b)."""
    return 2 * _a + _b - 2, _a + 2 * _b - 2, 2 * _a + 2 * _b - 3


def circle_invariance_identity() -> dict:
    """|T(a,b)|^2 - 1 = (a^2 + b^2 - 1) / (2a + 2b - 3)^2 as a polynomial identity."""
    n1, n2, d = _t_action_polys()
    lhs = n1 ** 2 + n2 ** 2 - d ** 2
    rhs = _a ** 2 + _b ** 2 - 1
    # R(a, b) = (b, -a)
    r_norm = _b ** 2 + (-_a) ** 2
    return {
        "lhs": repr(lhs),
        "rhs": repr(rhs),
        "T_identity": lhs == rhs,
        "R_preserves_norm": r_norm == _a ** 2 + _b ** 2,
    }


def reflection_symmetry() -> dict:
    """F(a, b) = (b, a) satisfies F R F = R^-1 and F T F = T."""
    swap = {"a": _b, "b": _a}
    # F R F (a, b) = F R (b, a) = F (a, -b) = (-b, a) = R^-1 (a, b)
    frf = (-_b, _a)
    n1, n2, d = _t_action_polys()
    # F T F (a, b) = F(T(b, a)) = (n2(b, a), n1(b, a)) / d(b, a)
    ftf_ok = n2.subs(swap) == n1 and n1.subs(swap) == n2 and d.subs(swap) == d
    return {"FRF_is_Rinv": frf == (-_b, _a), "FTF_is_T": ftf_ok}


def quadric_membership(s: Sequence) -> bool:
    """Is s on 4(x - z)^2 + 4y^2 = (x - y + z)^2 (the cone over the unit circle)?"""
    x, y, z = vec(s)
    return 4 * (x - z) ** 2 + 4 * y * y == (x - y + z) ** 2


def semiconjugacy_holds(g: str, s: Sequence) -> bool:
    """project(M s) == act2d(g, project(s)) for the 3D matrix M of g."""
    h = build(3)
    M = {"R": h.R, "R^-1": inverse(h.R), "T": h.T}[g]
    return project(M @ vec(s)) == act2d(g, project(s))


@dataclass(frozen=True)
class Q1Q2Report:
    lam1: Fraction
    lam2: Fraction
    s: PlanePoint
    TRs: PlanePoint
    theta: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    closed_forms_match: bool
    opposite_signs: bool
    reflection: dict

    def to_json(self) -> dict:
        out = {}
        for k, v in self.__dict__.items():
            if isinstance(v, (Fraction, PlanePoint)):
                v = str(v)
            out[k] = v
        return out


def closed_forms(l1, l2) -> tuple[Fraction, ...]:
    """(a, b, c, d) from the closed formulas with theta = (2 l1 - 3)(l1 + 2 l2 + 1)."""
    l1, l2 = rat(l1), rat(l2)
    theta = (2 * l1 - 3) * (l1 + 2 * l2 + 1)
    if theta == 0:
        raise ThetaZero(f"theta vanishes at ({l1}, {l2})")
    a = (l1 - 1) / theta
    b = 2 * (l1 + l2) ** 2 / theta
    d = -2 * (l2 * l2 + l1 + 3 * l2 + 1) / theta
    return a, b, a, d


def q1q2_obstruction(l1, l2) -> Q1Q2Report:
    """s = l1 (0,1) + l2 (1,1) + (1,1): show T R s lies outside the closed triangle (p, q, s).

    The triangle is the intersection of the cone at (0, 1) spanned by s - (0, 1)
    and (1, -1) with the cone at (1, 0) spanned by s - (1, 0) and (-1, 1).
    Writing T R s in both cones forces b * d < 0.
    """
    l1, l2 = rat(l1), rat(l2)
    if l1 < 0 or l2 < 0:
        raise ValueError("lambda_1 and lambda_2 must be non-negative")
    if l1 == 0 and l2 == 0:
        raise ValueError("s = (1, 1) is excluded")
    s = PlanePoint(l2 + 1, l1 + l2 + 1)
    try:
        trs = act_word(["T", "R"], s)
    except TPoleHit as exc:
        raise ThetaZero(f"T R s is undefined for lambda_1 = {l1}") from exc
    first = solve(RatMat([[l2 + 1, 1], [l1 + l2, -1]]), (trs.a, trs.b - 1))
    second = solve(RatMat([[l2, -1], [l1 + l2 + 1, 1]]), (trs.a - 1, trs.b))
    a, b = first
    c, d = second
    expected = closed_forms(l1, l2)
    theta = (2 * l1 - 3) * (l1 + 2 * l2 + 1)
    return Q1Q2Report(
        l1, l2, s, trs, theta, a, b, c, d,
        closed_forms_match=(a, b, c, d) == expected,
        opposite_signs=b * d < 0,
        reflection=reflection_symmetry(),
    )


# ---------------------------------------------------------------- figures


@dataclass
class FigureData:
    """Exact geometry for one figure; decimals appear only in the SVG writer."""

    name: str
    polygons: dict = field(default_factory=dict)  # label -> [PlanePoint]
    sequences: dict = field(default_factory=dict)  # label -> [PlanePoint]
    cones: dict = field(default_factory=dict)  # label -> (apex, [direction])
    points: dict = field(default_factory=dict)  # label -> PlanePoint
    annotations: dict = field(default_factory=dict)
    style: dict = field(default_factory=dict)  # label -> colour

    def labelled_points(self) -> list[tuple[str, PlanePoint]]:
        out = []
        for label, pts in self.polygons.items():
            out += [(f"{label}[{i}]", p) for i, p in enumerate(pts)]
        for label, pts in self.sequences.items():
            out += [(f"{label}[{i + 1}]", p) for i, p in enumerate(pts)]
        for label, (apex, dirs) in self.cones.items():
            out.append((f"{label}.apex", apex))
            out += [(f"{label}.ray{i}", d) for i, d in enumerate(dirs)]
        out += list(self.points.items())
        return out


def fig1() -> FigureData:
    """X = ±C, its rotations R^i X and the images T R^i X."""
    h = build(3)
    gens = [vec(g) for g in (U3, V3, W3)]
    fig = FigureData("fig1")
    colours = ["red", "blue", "green", "orange"]
    for i in range(4):
        Ri = h.R ** i
        label = "X" if i == 0 else f"R^{i}X"
        fig.polygons[label] = [project(Ri @ g) for g in gens]
        fig.style[label] = colours[i]
    for i in range(1, 4):
        M = h.T @ (h.R ** i)
        label = f"TR^{i}X"
        fig.polygons[label] = [project(M @ g) for g in gens]
        fig.style[label] = "black"
    return fig


def _deriv(p: UniPoly) -> UniPoly:
    return UniPoly([k * c for k, c in enumerate(p.coeffs)][1:], p.var)


def orbit_curve(M, start: Sequence) -> tuple[UniPoly, UniPoly, UniPoly]:
    """(A, B, D) with project(M^t start) = (A(t)/D(t), B(t)/D(t)), M unipotent."""
    X, Y, Z = matrix_power_poly(M).apply(vec(start))
    return (X - Z) * -2, Y * -2, X - Y + Z


def limit_tangent(curve) -> dict:
    """Slope of the tangent to t -> (A/D, B/D) as t -> infinity.

    The direction is (A'D - AD', B'D - BD'); comparing degrees and leading
    coefficients of the two components gives the limit exactly.
    """
    A, B, D = curve
    da = _deriv(A) * D - A * _deriv(D)
    db = _deriv(B) * D - B * _deriv(D)
    if db.is_zero() or da.degree > db.degree:
        slope = "0"
    elif da.is_zero() or db.degree > da.degree:
        slope = "inf"
    else:
        slope = str(db.leading / da.leading)
    return {"limit_slope": slope, "direction_a": repr(da), "direction_b": repr(db)}


def orbit_2d(word: Sequence[str], start: PlanePoint, count: int) -> list[PlanePoint]:
    out, p = [], start
    for _ in range(count):
        p = act_word(word, p)
        out.append(p)
    return out


def fig2(count: int = 25) -> FigureData:
    """(TR)^t (1, 0) and (TR^-1)^t (0, 1) for t = 1..count."""
    h = build(3)
    fig = FigureData("fig2")
    fig.sequences["orbit_TR"] = orbit_2d(["T", "R"], PlanePoint.of(1, 0), count)
    fig.sequences["orbit_TRinv"] = orbit_2d(["T", "R^-1"], PlanePoint.of(0, 1), count)
    fig.style = {"orbit_TR": "blue", "orbit_TRinv": "red"}
    fig.points = {"p": PlanePoint.of(0, 1), "q": PlanePoint.of(1, 0), "r": PlanePoint.of(1, 1)}
    fig.annotations = {
        "orbit_TR": limit_tangent(orbit_curve(h.T @ h.R, V3)),
        "orbit_TRinv": limit_tangent(orbit_curve(h.T @ inverse(h.R), U3)),
        "on_unit_circle": all(p.norm2() == 1 for seq in fig.sequences.values() for p in seq),
    }
    return fig


def fig34(l1=1, l2=1) -> FigureData:
    """The regions Q1, Q2 for the third vertex s and the cones X1', X2' for one s."""
    l1, l2 = rat(l1), rat(l2)
    one = PlanePoint.of(1, 1)
    s = PlanePoint(l2 + 1, l1 + l2 + 1)
    fig = FigureData("fig34")
    fig.cones["Q1"] = (one, [PlanePoint.of(0, 1), PlanePoint.of(1, 1)])
    fig.cones["Q2"] = (one, [PlanePoint.of(1, 0), PlanePoint.of(1, 1)])
    fig.cones["X1'"] = (PlanePoint.of(0, 1), [PlanePoint(s.a, s.b - 1), PlanePoint.of(1, -1)])
    fig.cones["X2'"] = (PlanePoint.of(1, 0), [PlanePoint(s.a - 1, s.b), PlanePoint.of(-1, 1)])
    fig.polygons["X'"] = [PlanePoint.of(0, 1), PlanePoint.of(1, 0), s]
    fig.points = {"s": s, "TRs": act_word(["T", "R"], s)}
    fig.style = {"Q1": "orange", "Q2": "purple", "X1'": "blue", "X2'": "green", "X'": "red"}
    return fig


FIGURES = {"fig1": fig1, "fig2": fig2, "fig34": fig34}


def figure_csv(fig: FigureData) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label", "a_num", "a_den", "b_num", "b_den"])
    for label, p in fig.labelled_points():
        w.writerow([label, p.a.numerator, p.a.denominator, p.b.numerator, p.b.denominator])
    return buf.getvalue()


def _num(x) -> str:
    return format(float(x), ".12g")


def figure_svg(fig: FigureData, size: int = 600, ray_length=4) -> str:
    """SVG 1.1 rendering; the y axis points up."""
    shapes = []
    xs, ys = [], []

    def pt(p):
        xs.append(p.a)
        ys.append(p.b)
        return f"{_num(p.a)},{_num(-p.b)}"

    for label, pts in fig.polygons.items():
        coords = " ".join(pt(p) for p in pts)
        shapes.append(f'<polygon points="{coords}" fill="{fig.style.get(label, "gray")}" '
                      f'fill-opacity="0.35" stroke="black" stroke-width="0.01"><title>{label}</title></polygon>')
    for label, (apex, dirs) in fig.cones.items():
        ends = [PlanePoint(apex.a + ray_length * d.a, apex.b + ray_length * d.b) for d in dirs]
        coords = " ".join(pt(p) for p in [apex] + ends)
        shapes.append(f'<polygon points="{coords}" fill="{fig.style.get(label, "gray")}" '
                      f'fill-opacity="0.2" stroke="none"><title>{label}</title></polygon>')
    for label, pts in fig.sequences.items():
        colour = fig.style.get(label, "black")
        for p in pts:
            shapes.append(f'<circle cx="{_num(p.a)}" cy="{_num(-p.b)}" r="0.015" fill="{colour}"/>')
            pt(p)
    for label, p in fig.points.items():
        shapes.append(f'<circle cx="{_num(p.a)}" cy="{_num(-p.b)}" r="0.025" fill="black"><title>{label}</title></circle>')
        pt(p)
    pad = Fraction(1, 4)
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = -max(ys) - pad, -min(ys) + pad
    view = f"{_num(x0)} {_num(y0)} {_num(x1 - x0)} {_num(y1 - y0)}"
    body = "\n  ".join(shapes)
    return (
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="{view}">\n'
        f"  <title>{fig.name}</title>\n  {body}\n</svg>\n"
    )


def emit_figures(which: str, fmt: str, path=None) -> FigureData:
    """Build a figure and, if ``path`` is given, write it as svg or csv."""
    if which not in FIGURES:
        raise ValueError(f"unknown figure {which!r}; choose from {sorted(FIGURES)}")
    if fmt not in ("svg", "csv"):
        raise ValueError("format must be svg or csv")
    fig = FIGURES[which]()
    if path is not None:
        text = figure_svg(fig) if fmt == "svg" else figure_csv(fig)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return fig
