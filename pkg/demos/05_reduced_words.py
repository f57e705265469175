"""
Reduced words
=============

A consequence of freeness: distinct reduced words give distinct matrices.
"""

from hgpingpong.generators import build
from hgpingpong.words import Word, count_by_recurrence, evaluate, injectivity_check

h3 = build(3)
w = Word((("T", 1), ("R", 2), ("T", 1), ("R", 1)))
print(w, "=", evaluate(w, h3).tolist())

for length in range(7):
    print(f"reduced words of length {length} in Z/4 * Z/2:", count_by_recurrence(3, 1, length))

rep = injectivity_check(h3, 10)
print(f"\nn = 3: {rep.checked} words, ok = {rep.ok}")
rep = injectivity_check(build(2), 6, exp_bound=3)
print(f"n = 2: {rep.checked} words, ok = {rep.ok}")
