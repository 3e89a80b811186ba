"""Norm-preserving dilations (Davis-Kahan-Weinberger completions).

Given blocks ``A (p x q)``, ``B (m x q)``, ``C (p x s)`` and a feasible bound
``mu >= max(||[A; B]||_2, ||[A, C]||_2)``, every ``D`` with
``||[[A, C], [B, D]]||_2 <= mu`` is

    D = -K A^H L + mu (I - K K^H)^{1/2} Z (I - L^H L)^{1/2},

    K^H = (mu^2 I - A^H A)^{-1/2} B^H,   L = (mu^2 I - A A^H)^{-1/2} C,

for a contraction ``Z``.  Singular ``mu^2 I - A^H A`` is handled through the
pseudo-inverse square root.
"""

import numpy as np

from .numlin import as_matrix, inv_sqrt_psd, psd_sqrt, spectral_norm

SINGULAR_TOL = 1e-12
CONTRACTION_TOL = 1e-10
FEASIBILITY_TOL = 1e-10


class InfeasibleBoundError(ValueError):
    """``mu`` is below the smallest achievable dilation norm."""


def _check_blocks(A, B, C):
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    C = as_matrix(C, "C")
    if B.shape[1] != A.shape[1]:
        raise ValueError(f"B must have {A.shape[1]} columns, got {B.shape[1]}")
    if C.shape[0] != A.shape[0]:
        raise ValueError(f"C must have {A.shape[0]} rows, got {C.shape[0]}")
    return A, B, C


def min_dilation_mu(A, B, C):
    """Smallest feasible ``mu``: ``max(||[A; B]||_2, ||[A, C]||_2)``."""
    A, B, C = _check_blocks(A, B, C)
    return max(spectral_norm(np.vstack([A, B])), spectral_norm(np.hstack([A, C])))


def as_contraction(Z, tol=CONTRACTION_TOL):
    """Validate ``||Z||_2 <= 1 + tol``; rescale to an exact contraction."""
    Z = as_matrix(Z, "Z")
    nz = spectral_norm(Z)
    if nz > 1.0 + tol:
        raise ValueError(f"Z is not a contraction (||Z||_2 = {nz:.6g})")
    if nz > 1.0:
        Z = Z / nz
    return Z


def dilation_factors(A, B, C, mu):
    """Return ``(K, L)`` for the completion formula."""
    A, B, C = _check_blocks(A, B, C)
    if not mu > 0:
        raise InfeasibleBoundError("mu must be positive")
    mu_min = min_dilation_mu(A, B, C)
    if mu < mu_min * (1.0 - FEASIBILITY_TOL) - FEASIBILITY_TOL:
        raise InfeasibleBoundError(f"mu = {mu:.6g} is infeasible, need mu >= {mu_min:.6g}")
    mu2 = mu * mu
    q, p = A.shape[1], A.shape[0]
    R = inv_sqrt_psd(mu2 * np.eye(q) - A.conj().T @ A, SINGULAR_TOL * mu2)
    Lr = inv_sqrt_psd(mu2 * np.eye(p) - A @ A.conj().T, SINGULAR_TOL * mu2)
    K = B @ R
    L = Lr @ C
    return K, L


PATTERNS = ("sym", "skewsym", "herm")


def dilation(A, B, C, mu, Z=None, pattern=None):
    """Completion ``D`` with ``||[[A, C], [B, D]]||_2 <= mu``.

    Parameters
    ----------
    A, B, C : array_like
        Fixed blocks of shapes ``(p, q)``, ``(m, q)`` and ``(p, s)``.
    mu : float
        Norm bound; must satisfy the feasibility condition up to a relative
        ``1e-10``.
    Z : array_like, optional
        ``(m, s)`` contraction parametrizing the family; ``None`` gives the
        central completion ``Z = 0``.
    pattern : {"sym", "skewsym", "herm"}, optional
        Declares that ``[[A, C], [B, Z]]`` has this symmetry.  ``L`` and the
        right square-root factor are then derived from ``K`` so that ``D``
        inherits the symmetry exactly, instead of up to the conditioning of
        two independent square roots (which is poor when ``mu`` is tight).

    Returns
    -------
    D : ndarray of shape ``(m, s)``
    """
    A, B, C = _check_blocks(A, B, C)
    if pattern is not None and pattern not in PATTERNS:
        raise ValueError(f"pattern must be one of {PATTERNS}, got {pattern!r}")
    m, s = B.shape[0], C.shape[1]
    K, L = dilation_factors(A, B, C, mu)
    if pattern == "herm":
        L = K.conj().T
    elif pattern is not None:
        L = K.T if pattern == "sym" else -K.T
    D = -K @ A.conj().T @ L
    if Z is not None:
        Z = as_contraction(Z)
        if Z.shape != (m, s):
            raise ValueError(f"Z must have shape {(m, s)}, got {Z.shape}")
        if m and s:
            left = psd_sqrt(np.eye(m) - K @ K.conj().T, scale=1.0)
            if pattern == "herm":
                right = left
            elif pattern is not None:
                right = left.conj()
            else:
                right = psd_sqrt(np.eye(s) - L.conj().T @ L, scale=1.0)
            D = D + mu * left @ Z @ right
    return D


def dilation_matrix(A, B, C, D):
    return np.block([[as_matrix(A), as_matrix(C)], [as_matrix(B), as_matrix(D)]])
