"""Many solutions of least spectral norm.

For Hermitian A and a data matrix X of rank r < n, the lower-right block of
A in the singular basis of X is free.  Its Frobenius-optimal value is zero.
Minimal spectral norm is achieved by a whole family of completions, one per
Hermitian contraction Z.  They all attain the same spectral norm mu.
"""

import numpy as np

from structlsq import StructureClass, min_frobenius, min_spectral_family, sigma_spectral
from structlsq.solver import free_block_shape

herm = StructureClass("herm")
rng = np.random.default_rng(2)
n, p = 6, 2
X = rng.standard_normal((n, p)) + 1j * rng.standard_normal((n, p))
B = rng.standard_normal((n, p)) + 1j * rng.standard_normal((n, p))

mu = sigma_spectral(herm, X, B)
k = free_block_shape(herm, X)[0]
fro = min_frobenius(herm, X, B)
print(f"mu = {mu:.10f}; free block {k}x{k}")
print(f"min-Frobenius solution: ||A||_2 = {np.linalg.norm(fro.A, 2):.10f} (can exceed mu)")

for trial in range(4):
    Z = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
    Z = Z + Z.conj().T
    Z /= np.linalg.norm(Z, 2)
    sol = min_spectral_family(herm, X, B, Z=Z)
    print(f"  Z #{trial}: ||A||_2 = {np.linalg.norm(sol.A, 2):.10f}, "
          f"residual {np.linalg.norm(sol.A @ X - B):.10f}, ||A||_F = {np.linalg.norm(sol.A):.4f}")
print(f"residual floor rho = {fro.rho:.10f}")
