"""
Companion-matrix generators
===========================

R is the companion matrix of 1 + x + ... + x^n and U the companion matrix of
(x - 1)^n.  T = U R^-1 differs from the identity by a rank-one matrix.
"""

from hgpingpong.exact import RatMat, charpoly
from hgpingpong.generators import build, matrix_order, validate

for n in (2, 3, 4):
    h = build(n)
    print(f"n = {n}")
    print("  R =", h.R.tolist())
    print("  U =", h.U.tolist())
    print("  T =", h.T.tolist())
    print("  charpoly R:", charpoly(h.R), "  charpoly U:", charpoly(h.U))
    print("  order of R:", matrix_order(h.R), "  order of T:", matrix_order(h.T) or "infinite")
    print("  checks:", validate(h))

# T has order two for odd n and is unipotent for even n
I3, I4 = RatMat.identity(3), RatMat.identity(4)
assert build(3).T ** 2 == I3
N = build(4).T - I4
assert N @ N == RatMat.zeros(4) and not N.is_zero()
print("\nT_3^2 = I and (T_4 - I)^2 = 0")
