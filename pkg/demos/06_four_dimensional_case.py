"""
n = 4 and n = 2
===============

For n = 4 the set X is a union of four cones built from x = (0,7,-2,7) and the
logarithms P = log(TR), Q = log(T^-1 R^-1).  A search for a single simplicial
cone through P^3x, Q^3x, P^2x finds nothing on a small box.
"""

from hgpingpong.cases import (
    bt_vector_report,
    build_bt,
    search_fourth_generator,
    verify_2d_case,
    verify_bt_table,
    verify_s_conjugation,
)

data = build_bt()
for name, v in data.vectors().items():
    print(f"{name:4s}", [str(a) for a in v])

rep = bt_vector_report(data)
print("\nscale against the displayed vectors:", {k: rep[k]["scale"] for k in ("x", "Px", "P2x", "P3x", "Qx", "Q3x")})
table = verify_bt_table(data)
print("T C+ ⊆ C+:", table["T_Cplus_in_Cplus"]["passed"], " T^-1 C- ⊆ C-:", table["Tinv_Cminus_in_Cminus"]["passed"])
print("four-cone table valid:", table["valid"])
print("S v0 = c x with c =", verify_s_conjugation()["scalar"])

print("\nsearch:", search_fourth_generator(2, data=data))

v = verify_2d_case()
print("\nn = 2 table valid:", v.valid, " closure covers the plane:", v.extra["closure_covers_plane"])
