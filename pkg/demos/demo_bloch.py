"""The qubit as a 3-ball: density-matrix correspondence, SU(2) -> SO(3),
group averaging, and the dimension laws.

Run: python3 demos/demo_bloch.py
"""

import numpy as np

from gptkit import bloch

rng = np.random.default_rng(0)

r = rng.normal(size=3)
r *= 0.7 / np.linalg.norm(r)
rho = bloch.bloch_to_density(r)
print(f"Bloch vector {np.round(r, 4)}")
print(f"eigenvalues  {np.round(np.linalg.eigvalsh(rho), 6)}"
      f"  vs  (1 +- |r|)/2 = {np.round([(1 - 0.7) / 2, (1 + 0.7) / 2], 6)}")

u = np.diag([np.exp(-1j * np.pi / 4), np.exp(1j * np.pi / 4)])
print(f"\nR(exp(-i pi/4 sigma_z)) =\n{np.round(bloch.unitary_to_rotation(u), 9)}")

samples = bloch.haar_so3(np.random.default_rng(0), 100000)
avg = bloch.group_average_state(samples, np.array([0.0, 0.0, 1.0]))
print(f"\n|group average of north pole| over 1e5 rotations: "
      f"{np.linalg.norm(avg):.5f}")

g = bloch.invariant_inner_product(samples)
print(f"group-averaged inner product (should be ~ identity):\n{np.round(g, 4)}")

rep = bloch.check_dimension_law(5)
print(f"\nK per classical N: {rep['classical']}")
print(f"K per quantum N:   {rep['quantum']}")
print(f"all dimension/capacity laws hold: {rep['all_hold']}")
