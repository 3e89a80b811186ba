"""Completing a block matrix without exceeding a norm bound.

Given A, B, C, every D with ||[[A, C], [B, D]]||_2 <= mu is parametrized by a
contraction Z.  At mu equal to the smallest feasible value the parametrization
may collapse; above it the completions spread out.
"""

import numpy as np

from structlsq import dilation, min_dilation_mu
from structlsq.dkw import dilation_matrix

rng = np.random.default_rng(3)
A, B, C = (rng.standard_normal(s) for s in ((2, 2), (2, 2), (2, 2)))
mu_min = min_dilation_mu(A, B, C)
print(f"smallest feasible mu = {mu_min:.6f}")

for mu in (mu_min, 1.5 * mu_min):
    print(f"\nmu = {mu:.6f}")
    Ds = []
    for _ in range(5):
        Z = rng.standard_normal((2, 2))
        Z /= np.linalg.norm(Z, 2)
        D = dilation(A, B, C, mu, Z)
        Ds.append(D)
        print(f"  ||T||_2 = {np.linalg.norm(dilation_matrix(A, B, C, D), 2):.12f}")
    spread = max(np.linalg.norm(D - Ds[0]) for D in Ds)
    print(f"  spread of the completions: {spread:.3e}")

print("\nA tight example: A = 0, B = C = 1, mu = 1 forces D = 0")
print("  D =", dilation(0.0, 1.0, 1.0, 1.0, Z=[[1.0]])[0, 0])
