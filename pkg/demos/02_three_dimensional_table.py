"""
The n = 3 ping-pong table
=========================

X = C ∪ -C with C the open cone on u = (1,-2,1), v = (1,0,3), w = (0,-1,1),
and Y = RX ∪ R^2X ∪ R^3X.  Each hypothesis reduces to the sign pattern of
a 3x3 cone-coordinate matrix.
"""

from hgpingpong import PingPongTable, build, cone, falsify, standard_cone, verify

h = build(3)
verdict = verify(PingPongTable.from_triple(h, standard_cone()))
for chk in verdict.checks:
    print(f"{chk.name:14s} {chk.result.kind.value:16s}", chk.matrix.tolist())
print("valid:", verdict.valid)

# moving w a little breaks the table, and the falsifier says where
bad = PingPongTable.from_triple(h, cone((1, -2, 1), (1, 0, 3), (1, -1, 1)))
w = falsify(bad)
print(f"\nperturbed cone: {w.violation} fails for {w.word}")
print("  q     =", [str(c) for c in w.q])
print("  image =", [str(c) for c in w.image], " rechecked:", w.recheck())

# the logarithm of TR explains the choice of generators
from hgpingpong.exact import column_space_intersection, inverse, matrix_power_poly, unipotent_log

P = unipotent_log(h.T @ h.R)
Q = unipotent_log(h.T @ inverse(h.R))
print("\nlog(TR) =", P.tolist())
print("(TR)^t =", matrix_power_poly(h.T @ h.R))
print("col(P) ∩ col(Q):", column_space_intersection(P, Q))
