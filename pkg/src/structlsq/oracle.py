"""Brute-force reference solver.

Expands ``A = sum_k c_k E_k`` over an orthonormal real basis of the class,
realifies ``A X`` and solves the resulting ordinary least-squares problem
for the minimal-norm coefficients.  Because the basis is
orthonormal for ``re Tr(A^H B)``, the minimal-``||c||_2`` solution is the
minimal-Frobenius structured minimizer.  Cost grows like ``n^4 p``; meant
for tests and debugging only.
"""

from dataclasses import dataclass

import numpy as np

from scipy.linalg import null_space

from .numlin import as_matrix, frobenius_norm
from .structures import class_adjoint, orthonormal_basis

MAX_DIM = 12
# structural null directions of the coefficient map are only exact to roundoff
LSQ_RCOND = 1e-10


@dataclass(frozen=True)
class OracleResult:
    rho: float
    A_min_fro: np.ndarray
    coeff_dim: int


def _realify(Y):
    Y = np.asarray(Y)
    return np.concatenate([Y.real.ravel(), Y.imag.ravel()])


def algebra_basis(S, n):
    """Orthonormal real basis of any class, as the null space of ``A -> A* - sign A``.

    Does not use the prototype reduction, so it can check it.
    """
    complex_field = S.field == "complex"
    dim = 2 * n * n if complex_field else n * n
    cols = []
    for k in range(dim):
        e = np.zeros(dim)
        e[k] = 1.0
        E = e[: n * n].reshape(n, n) + (1j * e[n * n:].reshape(n, n) if complex_field else 0)
        cols.append(_realify(class_adjoint(E, S) - S.sign * E))
    N = null_space(np.column_stack(cols), rcond=1e-10)
    basis = []
    for v in N.T:
        E = v[: n * n].reshape(n, n)
        if complex_field:
            E = E + 1j * v[n * n:].reshape(n, n)
        basis.append(E)
    return basis


def oracle_solve(S, X, B, basis=None, max_dim=MAX_DIM, rcond=LSQ_RCOND):
    """Minimal-norm least-squares solution in coefficient space.

    ``basis`` overrides the default basis (e.g. a permuted copy).  Prototype
    classes use :func:`orthonormal_basis`, Jordan / Lie classes
    :func:`algebra_basis`.
    """
    X = as_matrix(X, "X")
    B = as_matrix(B, "B")
    if X.shape != B.shape:
        raise ValueError(f"X and B must have the same shape, got {X.shape} and {B.shape}")
    n = X.shape[0]
    if n > max_dim:
        raise ValueError(f"oracle is capped at n <= {max_dim}, got n = {n}")
    S.check_field(X, B)
    if basis is None:
        basis = orthonormal_basis(S, n) if S.is_prototype else algebra_basis(S, n)
    A = np.zeros((n, n), dtype=complex)
    if basis:
        G = np.column_stack([_realify(E @ X) for E in basis])
        c = np.linalg.lstsq(G, _realify(B), rcond=rcond)[0]
        for ck, E in zip(c, basis):
            A += ck * E
    if S.field == "real":
        A = A.real
    return OracleResult(rho=residual(A, X, B), A_min_fro=A, coeff_dim=len(basis))


def residual(A, X, B):
    A = as_matrix(A, "A")
    X = as_matrix(X, "X")
    B = as_matrix(B, "B")
    if A.shape[1] != X.shape[0] or (A.shape[0], X.shape[1]) != B.shape:
        raise ValueError(f"shape mismatch: A {A.shape}, X {X.shape}, B {B.shape}")
    return frobenius_norm(A @ X - B)


def spectral_floor_check(core, A, tol=1e-9):
    """``||A||_2 >= ||[A11; A12]||_2 - tol`` for a minimizer ``A`` of ``core``'s problem."""
    return float(np.linalg.norm(as_matrix(A), 2)) >= float(np.linalg.norm(core.Pcol, 2)) - tol \
        if core.Pcol.size else True
