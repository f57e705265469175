"""
The planar picture
==================

Projecting to the chart x - y + z = 1 turns R into a quarter turn and T into
a linear fractional map preserving the unit circle.  The figures are written
next to this script.
"""

from pathlib import Path

from hgpingpong.projection import (
    PlanePoint,
    act2d,
    circle_invariance_identity,
    emit_figures,
    project,
    q1q2_obstruction,
)

for name, s in (("u", (1, -2, 1)), ("v", (1, 0, 3)), ("w", (0, -1, 1))):
    print(f"rho({name}) =", project(s))

print("T(1, 0) =", act2d("T", PlanePoint.of(1, 0)))
print("circle identity:", circle_invariance_identity())

rep = q1q2_obstruction(0, 1)
print(f"\nthird vertex s = {rep.s}: T R s = {rep.TRs}, b = {rep.b}, d = {rep.d}")

out = Path(__file__).with_name("figures")
out.mkdir(exist_ok=True)
for name in ("fig1", "fig2", "fig34"):
    fig = emit_figures(name, "svg", out / f"{name}.svg")
    emit_figures(name, "csv", out / f"{name}.csv")
    print(f"{name}: {len(fig.labelled_points())} points -> {out / name}.svg")
print("tangent limits:", {k: v["limit_slope"] for k, v in emit_figures("fig2", "svg").annotations.items() if isinstance(v, dict)})
