"""Reduce Jordan / Lie algebra problems to prototype-class problems.

With ``G = M A`` the residual is unchanged (``M`` unitary) and ``G`` lands
in one of the prototype classes.  Skew-Hermitian prototypes are rotated to
Hermitian ones: ``H`` minimizes ``||HX - iB||`` over Hermitian matrices iff
``-iH`` minimizes ``||AX - B||`` over skew-Hermitian ones.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .numlin import as_matrix
from .structures import Kind, StructureClass

# (form, sign of M, algebra sign) -> prototype of M S
PROTOTYPE_TABLE = {
    ("bilinear", 1, 1): Kind.SYM,
    ("bilinear", 1, -1): Kind.SKEWSYM,
    ("bilinear", -1, 1): Kind.SKEWSYM,
    ("bilinear", -1, -1): Kind.SYM,
    ("sesquilinear", 1, 1): Kind.HERM,
    ("sesquilinear", 1, -1): Kind.SKEWHERM,
    ("sesquilinear", -1, 1): Kind.SKEWHERM,
    ("sesquilinear", -1, -1): Kind.HERM,
}

# over the reals A^H = A^T
_REAL_FIELD = {Kind.HERM: Kind.SYM, Kind.SKEWHERM: Kind.SKEWSYM}


@dataclass(frozen=True)
class ReducedProblem:
    """A prototype problem plus the map ``G -> scalar * M^H G`` back to ``original``.

    ``proto`` is always Sym, SkewSym or Herm.
    """

    original: StructureClass
    proto: StructureClass
    X: np.ndarray
    B_reduced: np.ndarray
    M: Optional[np.ndarray] = None
    scalar: complex = 1.0

    def back(self, G):
        return from_prototype(self, G)


def prototype_of(S):
    """Prototype class ``M S`` (before the skew-Hermitian rotation)."""
    if S.is_prototype:
        return S
    sp = S.scalar_product
    kind = PROTOTYPE_TABLE[(sp.form, sp.m_sign, S.sign)]
    if S.field == "real":
        kind = _REAL_FIELD.get(kind, kind)
    return StructureClass(kind, S.field)


def to_prototype(S, X, B):
    X = as_matrix(X, "X")
    B = as_matrix(B, "B")
    if X.shape != B.shape:
        raise ValueError(f"X and B must have the same shape, got {X.shape} and {B.shape}")
    S.check_field(X, B)
    M = None
    if not S.is_prototype:
        M = S.scalar_product.M
        if M.shape[0] != X.shape[0]:
            raise ValueError(f"scalar product has dimension {M.shape[0]}, X has {X.shape[0]} rows")
        B = M @ B
    proto = prototype_of(S)
    scalar = 1.0
    if proto.kind == Kind.SKEWHERM:
        proto = StructureClass(Kind.HERM, "complex")
        B = 1j * B
        scalar = -1j
    return ReducedProblem(original=S, proto=proto, X=X, B_reduced=B, M=M, scalar=scalar)


def from_prototype(rp, G):
    G = np.asarray(G)
    n = rp.X.shape[0]
    if G.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} prototype solution, got {G.shape}")
    A = G if rp.M is None else rp.M.conj().T @ G
    if rp.scalar != 1.0:
        A = rp.scalar * A
    if rp.original.field == "real" and np.iscomplexobj(A):
        A = A.real
    return A


def to_prototype_member(rp, A):
    """Inverse of :func:`from_prototype`: ``G = M A / scalar``."""
    A = np.asarray(A)
    G = A if rp.M is None else rp.M @ A
    if rp.scalar != 1.0:
        G = G / rp.scalar
    return G
