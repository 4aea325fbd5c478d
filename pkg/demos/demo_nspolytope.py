"""Vertices of the no-signalling polytope as the maximal tensor product
of two gbits.

Run: python3 demos/demo_nspolytope.py
"""

import numpy as np

from gptkit import bell
from gptkit.composites import (enumerate_vertices, max_tensor, min_tensor,
                               reduced_state)
from gptkit.spaces import make_gbit

g = make_gbit()
comp = max_tensor(g, g)
verts = enumerate_vertices(comp)
print(f"max tensor of two gbits: {len(verts)} vertices")

diffs = verts[1:] - verts[0]
print(f"affine dimension: {np.linalg.matrix_rank(diffs, tol=1e-8)}")

counts = {"deterministic": 0, "pr": 0, "other": 0}
for v in verts:
    counts[bell.classify_ns_vertex(bell.table_from_composite_state(v))] += 1
print(f"classification: {counts}")

print(f"\nmin tensor (product states only): "
      f"{min_tensor(g, g).vertices.shape[0]} vertices")

# marginals of a PR-type vertex are maximally mixed
for v in verts:
    if bell.classify_ns_vertex(bell.table_from_composite_state(v)) == "pr":
        print(f"\na PR-type vertex has marginals "
              f"{np.round(reduced_state(comp, v, 'A'), 9)} / "
              f"{np.round(reduced_state(comp, v, 'B'), 9)}")
        break
