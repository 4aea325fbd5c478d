"""CHSH walkthrough: classical bound, PR box, quantum violation.

Run: python3 demos/demo_bell.py
"""

import numpy as np

from gptkit import bell

print("== deterministic strategies ==")
dets = bell.deterministic_tables()
vals = [bell.chsh(t) for t in dets]
print(f"CHSH over the 16 deterministic tables: min {min(vals)}, max {max(vals)}")

print("\n== random classical mixtures ==")
rng = np.random.default_rng(0)
best = 0.0
for _ in range(2000):
    w = rng.dirichlet(np.ones(16))
    best = max(best, abs(bell.chsh(bell.mix_deterministic(w))))
print(f"max |CHSH| over 2000 mixtures: {best:.6f}  (never above 2)")

print("\n== the PR box ==")
pr = bell.pr_box()
print(f"non-signalling: {bell.is_nonsignalling(pr)}")
print(f"CHSH = {bell.chsh(pr)}")
print(f"classical model: {bell.classical_membership(pr)}")

print("\n== quantum: the singlet at the standard angles ==")
t = bell.quantum_table(bell.singlet_setup())
print(f"CHSH = {bell.chsh(t):.12f}  vs  2 sqrt 2 = {2 * np.sqrt(2):.12f}")
print(f"classical model: {bell.classical_membership(t)}")

print("\n== see-saw from random starts ==")
for seed in range(3):
    val, setup, trace = bell.maximize_chsh_quantum(seed=seed, iterations=60,
                                                   return_trace=True)
    norm = np.abs(np.linalg.eigvalsh(bell.chsh_operator(setup))).max()
    print(f"seed {seed}: start {trace[0]:+.4f} -> {val:.12f}"
          f"   operator norm {norm:.12f}")
