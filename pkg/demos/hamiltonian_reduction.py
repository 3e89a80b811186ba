"""Hamiltonian matrices through the symplectic form.

A is Hamiltonian when (J A)^T = J A with J = [[0, I], [-I, 0]].  These are
the Lie algebra of the bilinear form defined by J.  Multiplying by J maps
them onto symmetric matrices without changing the residual, so the same
symmetric solver handles them.
"""

import numpy as np

from structlsq import StructureClass, is_member, min_frobenius, oracle_solve
from structlsq.oracle import algebra_basis

m = 3
J = np.block([[np.zeros((m, m)), np.eye(m)], [-np.eye(m), np.zeros((m, m))]])
ham = StructureClass.lie(J, "bilinear", "real")

rng = np.random.default_rng(1)
X = rng.standard_normal((2 * m, 2))
B = rng.standard_normal((2 * m, 2))

sol = min_frobenius(ham, X, B)
print("solved via prototype:", sol.class_resolved)
print("A is Hamiltonian:", is_member(sol.A, ham))
print("J A symmetric:", np.allclose((J @ sol.A).T, J @ sol.A))

# the oracle below works directly on a basis of the Hamiltonian matrices
print(f"dimension of the algebra: {len(algebra_basis(ham, 2 * m))} (expected {m * (2 * m + 1)})")
ref = oracle_solve(ham, X, B)
print(f"residual: closed form {sol.rho:.12f}, direct oracle {ref.rho:.12f}")
print(f"solution gap {np.linalg.norm(sol.A - ref.A_min_fro):.2e}")
