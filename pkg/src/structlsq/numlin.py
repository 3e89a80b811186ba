"""Dense matrix kernels shared by the solvers.

Everything here is a thin, tolerance-aware layer over :mod:`numpy.linalg`:
a trimmed SVD with explicit orthonormal complements, the Moore-Penrose
pseudo-inverse built from it, a clamped PSD square root, and the coefficient
matrix ``D_ij = 1 / (s_i**2 + s_j**2)`` used by the closed forms.
"""

from dataclasses import dataclass

import numpy as np


def as_matrix(A, name="matrix"):
    """Return ``A`` as a finite 2-D ndarray (real or complex, never int)."""
    A = np.asarray(A)
    if A.ndim == 0:
        A = A.reshape(1, 1)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    if A.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {A.shape}")
    if not np.iscomplexobj(A):
        A = A.astype(float)
    if not np.all(np.isfinite(A)):
        raise ValueError(f"{name} has non-finite entries")
    return A


def default_rtol(shape):
    return max(shape) * np.finfo(float).eps if len(shape) else 0.0


@dataclass(frozen=True)
class TrimmedSvd:
    """SVD ``X = U1 @ diag(s) @ V1^H`` with complements ``U2``, ``V2``.

    ``s`` holds the ``r`` retained singular values in non-increasing order.
    """

    U1: np.ndarray
    U2: np.ndarray
    s: np.ndarray
    V1: np.ndarray
    V2: np.ndarray

    @property
    def rank(self):
        return self.s.size

    @property
    def Sigma1(self):
        return np.diag(self.s)

    @property
    def U(self):
        return np.hstack([self.U1, self.U2])

    @property
    def V(self):
        return np.hstack([self.V1, self.V2])


def trimmed_svd(X, rtol=0.0):
    """Full SVD of ``X`` split at its numerical rank.

    Singular values ``<= rtol * s_max`` are discarded.  ``rtol=0`` selects
    ``max(n, p) * eps``.
    """
    X = as_matrix(X, "X")
    if rtol < 0:
        raise ValueError("rtol must be nonnegative")
    n, p = X.shape
    if rtol == 0:
        rtol = default_rtol(X.shape)
    if X.size == 0:
        U = np.eye(n, dtype=X.dtype)
        V = np.eye(p, dtype=X.dtype)
        s = np.zeros(0)
    else:
        U, s, Vh = np.linalg.svd(X, full_matrices=True)
        V = Vh.conj().T
    r = int(np.count_nonzero(s > rtol * s[0])) if s.size and s[0] > 0 else 0
    return TrimmedSvd(U1=U[:, :r], U2=U[:, r:], s=s[:r].copy(), V1=V[:, :r], V2=V[:, r:])


def pseudo_inverse(X, rtol=0.0, svd=None):
    """Moore-Penrose pseudo-inverse ``V1 diag(1/s) U1^H``."""
    X = as_matrix(X, "X")
    t = svd if svd is not None else trimmed_svd(X, rtol)
    return (t.V1 / t.s) @ t.U1.conj().T


def coeff_matrix_D(s):
    """``D_ij = 1 / (s_i**2 + s_j**2)`` for strictly positive ``s``.

    ``s`` may be the vector of singular values or the diagonal matrix.
    """
    s = np.asarray(s, dtype=float)
    if s.ndim == 2:
        s = np.diag(s)
    if np.any(s <= 0):
        raise ValueError("singular values must be strictly positive")
    sq = s**2
    return 1.0 / (sq[:, None] + sq[None, :])


def hadamard(A, B):
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    return A * B


def psd_sqrt(H, tol=1e-10, scale=None):
    """Hermitian PSD square root, clamping eigenvalues in ``[-tol*||H||, 0)``.

    ``scale`` replaces ``||H||_2`` as the reference magnitude when given; use
    it for factors like ``I - K K^H`` that may be nearly zero.

    Raises
    ------
    ValueError
        If ``H`` is not Hermitian, or has an eigenvalue below
        ``-tol * ||H||_2``.
    """
    H = as_matrix(H, "H")
    if H.shape[0] != H.shape[1]:
        raise ValueError("H must be square")
    if H.size == 0:
        return H.copy()
    if frobenius_norm(H - H.conj().T) > 1e-8 * max(frobenius_norm(H), 1.0):
        raise ValueError("H is not Hermitian")
    w, Q = np.linalg.eigh(0.5 * (H + H.conj().T))
    norm2 = max(np.max(np.abs(w)), scale or 0.0, np.finfo(float).tiny)
    if w[0] < -tol * norm2:
        raise ValueError(f"H is not positive semidefinite (min eigenvalue {w[0]:.3e})")
    root = np.sqrt(np.clip(w, 0.0, None))
    S = (Q * root) @ Q.conj().T
    return 0.5 * (S + S.conj().T)


def inv_sqrt_psd(H, threshold):
    """Pseudo-inverse square root of Hermitian PSD ``H``.

    Eigenvalues ``<= threshold`` are treated as zero and left out.
    """
    w, Q = np.linalg.eigh(0.5 * (H + H.conj().T))
    keep = w > threshold
    inv_root = np.zeros_like(w)
    inv_root[keep] = 1.0 / np.sqrt(w[keep])
    S = (Q * inv_root) @ Q.conj().T
    return 0.5 * (S + S.conj().T)


def spectral_norm(A):
    A = np.asarray(A)
    if A.size == 0:
        return 0.0
    return float(np.linalg.norm(A, 2))


def frobenius_norm(A):
    A = np.asarray(A)
    if A.size == 0:
        return 0.0
    return float(np.linalg.norm(A, "fro"))
