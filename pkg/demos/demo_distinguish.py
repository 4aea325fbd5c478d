"""State distinguishability on the square state space.

Every pair of gbit vertices is perfectly distinguishable, no triple is,
so the capacity is 2 even though there are 4 pure states.

Run: python3 demos/demo_distinguish.py
"""

import numpy as np

from gptkit.distinguish import capacity, perfectly_distinguishable
from gptkit.spaces import make_classical, make_gbit, make_quantum

g = make_gbit()
v = g.vertices

print("== pairs ==")
for i in range(4):
    for j in range(i + 1, 4):
        wit = perfectly_distinguishable(g, v[[i, j]])
        err = wit.delta_error() if wit else None
        print(f"vertices {i},{j}: witness "
              f"{'found, delta error %.1e' % err if wit else 'none'}")

print("\n== triples ==")
for k in range(4):
    idx = [i for i in range(4) if i != k]
    wit = perfectly_distinguishable(g, v[idx])
    print(f"vertices {idx}: {'distinguishable' if wit else 'not jointly distinguishable'}")

print(f"\ngbit capacity: {capacity(g)}")
print(f"classical(4) capacity: {capacity(make_classical(4))}")
print(f"quantum(3) capacity: {capacity(make_quantum(3))}")
