"""
Why the cone is unique
======================

A valid cone must contain the eigenvectors u and v, so write the third
generator as lam*u + mu*v + eta*w and watch the coordinates.
"""

from hgpingpong.uniqueness import (
    default_scan,
    symbolic_coords_TR,
    symbolic_coords_TRinv,
    symbolic_coords_TRt_v,
)

a, b, c = symbolic_coords_TRt_v()
print("eta * coordinates of (TR)^t v:")
print("  a =", a)
print("  b =", b)
print("  c =", c)

_, b_tr, _ = symbolic_coords_TR()
a_inv, _, _ = symbolic_coords_TRinv()
print("\nz-coefficient of b for TR q:     ", b_tr.coefficient("z", 1))
print("z-coefficient of a' for TR^-1 q: ", a_inv.coefficient("z", 1))

rep = default_scan()
print(f"\ngrid scan: {len(rep.falsified)} cones falsified, survivors:")
for p in rep.survivors:
    print("  lam, mu, eta =", tuple(str(x) for x in p))
