"""Closed-form solver for ``min_{A in S} ||A X - B||_F``.

Work happens in the coordinates of the SVD ``X = U Sigma V^H``.  For a
prototype class every member can be written ``A = W T U^H`` with ``W = conj(U)``
(symmetric, skew-symmetric) or ``W = U`` (Hermitian) and

    T = [[A11, +-A12^*],
         [A12, A22    ]],

where ``A11`` is ``r x r`` and carries the class symmetry.  The residual
depends on ``A11`` and ``A12`` only, and both have closed-form optima; the
free block ``A22`` parametrizes every minimizer.  ``A22 = 0`` is the unique
minimal-Frobenius solution; the minimal-spectral solutions fill ``A22`` with
a norm-preserving completion of the column block ``[A11; A12]``.

Jordan and Lie algebras go through :mod:`structlsq.reduction` first.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import null_space

from . import dkw
from .numlin import (TrimmedSvd, as_matrix, coeff_matrix_D, frobenius_norm, hadamard,
                     psd_sqrt, pseudo_inverse, spectral_norm, trimmed_svd)
from .reduction import to_prototype, to_prototype_member
from .structures import Kind, StructureClass, is_member, structured_project

MU_TOL = 1e-14
FACTOR_TOL = 1e-12


class DegenerateInputError(ValueError):
    """Input rejected by a documented degenerate-case convention (e.g. ``x = 0``)."""


def scalar_min(alpha, beta, b1, b2):
    """Minimizer over complex ``x`` of ``|x alpha - b1|^2 + |x beta - b2|^2``."""
    denom = alpha * alpha + beta * beta
    if denom == 0:
        raise ValueError("alpha and beta must not both vanish")
    return (alpha * b1 + beta * b2) / denom


@dataclass(frozen=True)
class SolutionCore:
    """Fixed blocks shared by every minimizer of one prototype problem.

    ``A12`` is the ``(n - r) x r`` coupling block and ``Pcol = [A11; A12]``.
    """

    proto: StructureClass
    X: np.ndarray
    B: np.ndarray
    svd: TrimmedSvd
    D: np.ndarray
    A11: np.ndarray
    A12: np.ndarray
    rho: float

    @property
    def rank(self):
        return self.svd.rank

    @property
    def n(self):
        return self.X.shape[0]

    @property
    def Pcol(self):
        return np.vstack([self.A11, self.A12])

    @property
    def uses_conj(self):
        return self.proto.kind in (Kind.SYM, Kind.SKEWSYM)

    def _tr(self, Y):
        """``Y^T`` for (skew-)symmetric classes, ``Y^H`` for Hermitian."""
        return Y.T if self.uses_conj else Y.conj().T

    @property
    def W(self):
        U = self.svd.U
        return U.conj() if self.uses_conj else U

    @property
    def top_right(self):
        sign = -1 if self.proto.kind == Kind.SKEWSYM else 1
        return sign * self._tr(self.A12)

    def assemble(self, A22=None):
        """``W [[A11, +-A12^*], [A12, A22]] U^H``; ``A22 = None`` means zero."""
        n, r = self.n, self.rank
        dtype = np.result_type(self.A11, self.A12, self.svd.U, float)
        T = np.zeros((n, n), dtype=dtype)
        T[:r, :r] = self.A11
        T[r:, :r] = self.A12
        T[:r, r:] = self.top_right
        if A22 is not None:
            T = T.astype(np.result_type(T, A22))
            T[r:, r:] = A22
        return self.W @ T @ self.svd.U.conj().T

    def compress(self, G):
        """Free-block coordinates ``U2^* G U2`` of an ``n x n`` prototype member."""
        U2 = self.svd.U2
        return self._tr(U2) @ G @ U2


def core(S, X, B, rtol=0.0):
    """Optimal fixed blocks and residual for a prototype class ``S``.

    ``S`` must be symmetric, skew-symmetric or Hermitian; other classes are
    reduced by :func:`reduced_core`.
    """
    if S.kind not in (Kind.SYM, Kind.SKEWSYM, Kind.HERM):
        raise ValueError(f"core needs a sym/skewsym/herm prototype, got {S.name}")
    X = as_matrix(X, "X")
    B = as_matrix(B, "B")
    if X.shape != B.shape:
        raise ValueError(f"X and B must have the same shape, got {X.shape} and {B.shape}")
    S.check_field(X, B)
    t = trimmed_svd(X, rtol)
    r = t.rank
    tr = (lambda Y: Y.T) if S.kind != Kind.HERM else (lambda Y: Y.conj().T)
    if r == 0:
        dtype = np.result_type(X, B)
        A11 = np.zeros((0, 0), dtype=dtype)
        A12 = np.zeros((X.shape[0], 0), dtype=dtype)
        return SolutionCore(S, X, B, t, np.zeros((0, 0)), A11, A12, frobenius_norm(B))
    s = t.s
    D = coeff_matrix_D(s)
    C = tr(t.U1) @ B @ t.V1
    CS = C * s[None, :]           # C Sigma1
    SC = s[:, None] * tr(C)       # Sigma1 C^*
    A11 = hadamard(D, CS - SC if S.kind == Kind.SKEWSYM else CS + SC)
    A12 = (tr(t.U2) @ B @ t.V1) / s[None, :]
    rho = np.hypot(frobenius_norm(A11 * s[None, :] - C), frobenius_norm(B @ t.V2))
    return SolutionCore(S, X, B, t, D, A11, A12, float(rho))


def reduced_core(S, X, B, rtol=0.0):
    """Reduce ``S`` to a prototype and compute the core there."""
    rp = to_prototype(S, X, B)
    return rp, core(rp.proto, rp.X, rp.B_reduced, rtol)


def rho(S, X, B, rtol=0.0):
    """Optimal residual ``min_{A in S} ||A X - B||_F``."""
    return reduced_core(S, X, B, rtol)[1].rho


def f_term(c):
    """Minimal-Frobenius minimizer in global form.

    ``conj(U1) A11 U1^H +- (B X^+)^T P + P^T B X^+`` with ``P = I - X X^+``
    (``^H`` throughout for the Hermitian class).
    """
    t = c.svd
    X_pinv = pseudo_inverse(c.X, svd=t)
    P = t.U2 @ t.U2.conj().T
    BXp = c.B @ X_pinv
    sign = -1 if c.proto.kind == Kind.SKEWSYM else 1
    W1 = t.U1.conj() if c.uses_conj else t.U1
    return W1 @ c.A11 @ t.U1.conj().T + sign * c._tr(BXp) @ P + c._tr(P) @ BXp


@dataclass(frozen=True)
class Solution:
    """One residual-optimal structured solution and its norm data."""

    A: np.ndarray
    rho: float
    norm_kind: str
    sigma: float
    unique: bool
    class_resolved: str
    mu: Optional[float] = None
    K: Optional[np.ndarray] = field(default=None, repr=False)


def _validate_member(Z, S, sanitize, what="Z"):
    Z = as_matrix(Z, what)
    if sanitize:
        return structured_project(Z, S)
    if not is_member(Z, S):
        raise ValueError(f"{what} is not a member of {S.name}")
    return Z


def solution_family(S, X, B, Z=None, rtol=0.0, sanitize=False):
    """Residual-optimal member ``F + P^* Z P`` of ``S`` for a free ``Z in S``.

    ``Z`` is ``n x n`` and must lie in ``S`` (or is projected onto it when
    ``sanitize`` is true); ``Z = None`` means zero.
    """
    rp, c = reduced_core(S, X, B, rtol)
    G = f_term(c)
    if Z is not None:
        n = c.n
        Z = _validate_member(Z, S, sanitize)
        if Z.shape != (n, n):
            raise ValueError(f"Z must be {n}x{n}, got {Z.shape}")
        GZ = to_prototype_member(rp, Z)
        P = c.svd.U2 @ c.svd.U2.conj().T
        G = G + c._tr(P) @ GZ @ P
    return rp.back(G)


def min_frobenius(S, X, B, rtol=0.0):
    """The unique residual-optimal member of ``S`` of least Frobenius norm."""
    rp, c = reduced_core(S, X, B, rtol)
    A = rp.back(c.assemble())
    sigma = np.sqrt(frobenius_norm(c.A11) ** 2 + 2 * frobenius_norm(c.A12) ** 2)
    return Solution(A=A, rho=c.rho, norm_kind="frobenius", sigma=float(sigma),
                    unique=True, class_resolved=c.proto.name)


def sigma_spectral(S, X, B, rtol=0.0):
    """Least spectral norm over residual-optimal members: ``||[A11; A12]||_2``."""
    return spectral_norm(reduced_core(S, X, B, rtol)[1].Pcol)


def free_block_shape(S, X, rtol=0.0):
    """Shape of the contraction parameter of :func:`min_spectral_family`."""
    k = as_matrix(X).shape[0] - trimmed_svd(X, rtol).rank
    return (k, k)


def _free_block_parameter(rp, c, Z, sanitize):
    k = c.n - c.rank
    Z = as_matrix(Z, "Z")
    if Z.shape == (c.n, c.n) and k != c.n:
        Z = _validate_member(Z, rp.original, sanitize)
        Z = c.compress(to_prototype_member(rp, Z))
    elif Z.shape == (k, k):
        if k:
            Z = _validate_member(Z, c.proto, sanitize)
    else:
        raise ValueError(f"Z must be {k}x{k} (free block) or {c.n}x{c.n}, got {Z.shape}")
    if sanitize and k:
        nz = spectral_norm(Z)
        if nz > 1:
            Z = Z / nz
    return dkw.as_contraction(Z)


def _z_term_vanishes(slack, kind):
    """Whether ``Z -> R Z R^*`` with ``R = (I - K K^H)^{1/2}`` kills every ``Z`` of the class.

    A skew-symmetric ``Z`` survives only if ``R`` has rank at least 2.
    """
    if slack.size == 0:
        return True
    rank = int(np.count_nonzero(np.linalg.eigvalsh(slack) > FACTOR_TOL))
    return rank < (2 if kind == Kind.SKEWSYM else 1)


def min_spectral_family(S, X, B, Z=None, rtol=0.0, sanitize=False):
    """A residual-optimal member of ``S`` with least spectral norm.

    Parameters
    ----------
    S : StructureClass
    X, B : array_like
        ``n x p`` data.
    Z : array_like, optional
        Contraction selecting the family member.  Either ``k x k`` with
        ``k = n - rank(X)`` and the symmetry of the reduced prototype class
        (it becomes the free block directly), or ``n x n`` in ``S`` (it is
        compressed onto the free block).  ``None`` gives the central member.
    sanitize : bool
        Project ``Z`` onto the class and rescale it instead of rejecting.

    Returns
    -------
    Solution
        ``sigma == mu`` is the least spectral norm; ``K`` is the dilation
        factor of the free block.
    """
    rp, c = reduced_core(S, X, B, rtol)
    mu = spectral_norm(c.Pcol)
    k = c.n - c.rank
    unique = k == 0
    K = None
    if Z is not None:
        Z = _free_block_parameter(rp, c, Z, sanitize)
    if k == 0 or mu <= MU_TOL * (1.0 + frobenius_norm(c.B)):
        A22 = None
        unique = True
    else:
        C = c.top_right
        K, L = dkw.dilation_factors(c.A11, c.A12, C, mu)
        if Z is not None and frobenius_norm(Z) == 0:
            Z = None
        A22 = dkw.dilation(c.A11, c.A12, C, mu, Z, pattern=c.proto.kind.value)
        A22 = structured_project(A22, c.proto)
        unique = _z_term_vanishes(np.eye(k) - K @ K.conj().T, c.proto.kind)
    A = rp.back(c.assemble(A22))
    return Solution(A=A, rho=c.rho, norm_kind="spectral", sigma=mu, unique=bool(unique),
                    class_resolved=c.proto.name, mu=mu, K=K)


def solve(S, X, B, norm="fro", Z=None, rtol=0.0, sanitize=False):
    if norm in ("fro", "frobenius"):
        return min_frobenius(S, X, B, rtol)
    if norm in ("spec", "spectral", "2"):
        return min_spectral_family(S, X, B, Z, rtol, sanitize)
    raise ValueError(f"unknown norm {norm!r}")


# ---------------------------------------------------------------------------
# single right-hand side: x, b vectors

def _vector_args(S, x, b):
    if S.kind not in (Kind.SKEWSYM, Kind.HERM):
        raise ValueError("vector formulas cover skew-symmetric and Hermitian classes")
    x = np.asarray(x).reshape(-1)
    b = np.asarray(b).reshape(-1)
    if x.shape != b.shape:
        raise ValueError("x and b must have the same length")
    S.check_field(x, b)
    nx = np.linalg.norm(x)
    if nx == 0:
        raise DegenerateInputError("x must be nonzero")
    return x, b, nx


def vector_rho(S, x, b):
    """``|x^T b| / ||x||`` (skew-symmetric) or ``|im(x^H b)| / ||x||`` (Hermitian)."""
    x, b, nx = _vector_args(S, x, b)
    if S.kind == Kind.SKEWSYM:
        return float(abs(x @ b) / nx)
    return float(abs(np.vdot(x, b).imag) / nx)


def _vector_fro_parts(S, x, b, nx):
    if S.kind == Kind.SKEWSYM:
        u = b - x.conj() * (x @ b) / nx**2          # conj(P_x) b
        A = (np.outer(u, x.conj()) - np.outer(x.conj(), u)) / nx**2
        a = 0.0
    else:
        u = b - x * np.vdot(x, b) / nx**2           # P_x b
        a = np.vdot(x, b).real / nx**2
        A = a * np.outer(x, x.conj()) / nx**2 + (np.outer(x, u.conj()) + np.outer(u, x.conj())) / nx**2
    return A, u, a


def vector_min_frobenius(S, x, b):
    """Minimal-Frobenius solution for one column, by explicit vector formulas."""
    x, b, nx = _vector_args(S, x, b)
    A, u, a = _vector_fro_parts(S, x, b, nx)
    sigma = np.sqrt(a * a + 2 * np.vdot(u, u).real / nx**2)
    return Solution(A=A, rho=vector_rho(S, x, b), norm_kind="frobenius", sigma=float(sigma),
                    unique=True, class_resolved=S.name)


def vector_min_spectral_family(S, x, b, Z=None):
    """Minimal-spectral solutions for one column.

    ``Z`` is an ``(n-1) x (n-1)`` contraction in ``S``, expressed in an
    orthonormal basis ``Q1`` of the complement of ``x``.
    """
    x, b, nx = _vector_args(S, x, b)
    n = x.size
    A, u, a = _vector_fro_parts(S, x, b, nx)
    nu2 = np.vdot(u, u).real / nx**2
    mu = float(np.sqrt(a * a + nu2))
    rho_ = vector_rho(S, x, b)
    if Z is not None:
        Z = as_matrix(Z, "Z")
        if Z.shape != (n - 1, n - 1):
            raise ValueError(f"Z must be {(n - 1, n - 1)}, got {Z.shape}")
        if n > 1:
            if not is_member(Z, S):
                raise ValueError(f"Z is not a member of {S.name}")
            Z = dkw.as_contraction(Z)
    if n == 1 or mu <= MU_TOL * (1.0 + np.linalg.norm(b)):
        return Solution(A=A, rho=rho_, norm_kind="spectral", sigma=mu, unique=True,
                        class_resolved=S.name, mu=mu)
    Q1 = null_space(x.conj()[None, :])
    if not np.iscomplexobj(x) and not np.iscomplexobj(b):
        Q1 = Q1.real
    if S.kind == Kind.SKEWSYM:
        K = (Q1.T @ b) / (mu * nx)
        Wl = Q1.conj()
    else:
        denom = mu * mu * nx**4 - (a * nx**2) ** 2
        if denom > FACTOR_TOL * mu * mu * nx**4:
            K = (Q1.conj().T @ b) / nx / np.sqrt(denom / nx**4)
            Pb = u
            A = A - (a * nx**2) * np.outer(Pb, Pb.conj()) / denom
        else:
            K = np.zeros(n - 1, dtype=np.result_type(Q1, b))
        Wl = Q1
    K = K.reshape(-1, 1)
    slack = np.eye(n - 1) - K @ K.conj().T
    unique = _z_term_vanishes(slack, S.kind)
    if Z is not None and not unique:
        root = psd_sqrt(slack, scale=1.0)
        root_t = root.T if S.kind == Kind.SKEWSYM else root
        A = A + mu * Wl @ root @ Z @ root_t @ Q1.conj().T
    return Solution(A=A, rho=rho_, norm_kind="spectral", sigma=mu, unique=bool(unique),
                    class_resolved=S.name, mu=mu, K=K)
