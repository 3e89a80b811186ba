"""One right-hand side: explicit formulas in x and b.

For Hermitian A with Ax close to b, the minimal Frobenius norm picks up a
contribution from re(x^H b), the component of b along x.  The check below
compares the vector formulas with the general solver and the brute-force
oracle.
"""

import numpy as np

from structlsq import (StructureClass, min_frobenius, oracle_solve, vector_min_frobenius,
                       vector_rho)

herm = StructureClass("herm")
rng = np.random.default_rng(4)
x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
b = 2.0 * x + 0.3 * (rng.standard_normal(4) + 1j * rng.standard_normal(4))

v = vector_min_frobenius(herm, x, b)
m = min_frobenius(herm, x[:, None], b[:, None])
ref = oracle_solve(herm, x[:, None], b[:, None])
nx = np.linalg.norm(x)
without_re = np.sqrt(2) * np.sqrt(np.linalg.norm(b) ** 2 - abs(np.vdot(x, b)) ** 2 / nx**2)

print(f"rho: vector {vector_rho(herm, x, b):.12f}, matrix {m.rho:.12f}")
print(f"sigma: vector {v.sigma:.12f}, matrix {m.sigma:.12f}, oracle {np.linalg.norm(ref.A_min_fro):.12f}")
print(f"sigma ignoring re(x^H b): {without_re:.12f}")
print(f"||A_vector - A_matrix||_F = {np.linalg.norm(v.A - m.A):.2e}")
