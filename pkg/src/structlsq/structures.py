"""Scalar products, adjoints and the structure classes built on them.

A structure class is either one of the four prototype classes (symmetric,
skew-symmetric, Hermitian, skew-Hermitian) or the Jordan / Lie algebra of a
scalar product ``<x, y>_M`` given by a unitary ``M`` that is itself
(skew-)symmetric or (skew-)Hermitian.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .numlin import as_matrix, frobenius_norm

MEMBER_TOL = 1e-8
UNITARY_TOL = 1e-8


class Kind(str, Enum):
    SYM = "sym"
    SKEWSYM = "skewsym"
    HERM = "herm"
    SKEWHERM = "skewherm"
    JORDAN = "jordan"
    LIE = "lie"


PROTOTYPES = (Kind.SYM, Kind.SKEWSYM, Kind.HERM, Kind.SKEWHERM)

# +1 when members satisfy A* = A, -1 when A* = -A
_SIGN = {
    Kind.SYM: 1, Kind.HERM: 1, Kind.JORDAN: 1,
    Kind.SKEWSYM: -1, Kind.SKEWHERM: -1, Kind.LIE: -1,
}


def _symmetry_types(M, tol):
    scale = tol * max(frobenius_norm(M), 1.0)
    types = []
    if frobenius_norm(M - M.T) <= scale:
        types.append("symmetric")
    if frobenius_norm(M + M.T) <= scale:
        types.append("skew-symmetric")
    if frobenius_norm(M - M.conj().T) <= scale:
        types.append("hermitian")
    if frobenius_norm(M + M.conj().T) <= scale:
        types.append("skew-hermitian")
    return tuple(types)


@dataclass(frozen=True)
class ScalarProduct:
    """``<x, y>_M = y^T M x`` (bilinear) or ``y^H M x`` (sesquilinear).

    ``M`` must be unitary and (skew-)symmetric for the bilinear form,
    (skew-)Hermitian for the sesquilinear one.
    """

    M: np.ndarray
    form: str = "bilinear"
    symmetry: tuple = field(init=False, default=())

    def __post_init__(self):
        M = as_matrix(self.M, "M")
        if self.form not in ("bilinear", "sesquilinear"):
            raise ValueError(f"unknown form {self.form!r}")
        n = M.shape[0]
        if M.shape != (n, n):
            raise ValueError("M must be square")
        if frobenius_norm(M.conj().T @ M - np.eye(n)) > UNITARY_TOL * max(n, 1):
            raise ValueError("M must be unitary")
        types = _symmetry_types(M, 1e-8)
        if not types:
            raise ValueError("M is neither (skew-)symmetric nor (skew-)Hermitian")
        usable = ("symmetric", "skew-symmetric") if self.form == "bilinear" or not np.iscomplexobj(M) \
            else ("hermitian", "skew-hermitian")
        if not any(t in usable for t in types):
            raise ValueError(f"{self.form} form needs M of type {' or '.join(usable)}, got {types}")
        M = M.copy()
        M.setflags(write=False)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "symmetry", types)

    @property
    def n(self):
        return self.M.shape[0]

    @property
    def m_sign(self):
        """+1 if ``M^* = M`` for the form's transpose, -1 if ``M^* = -M``."""
        if self.form == "bilinear":
            return 1 if "symmetric" in self.symmetry else -1
        return 1 if "hermitian" in self.symmetry else -1

    def to_json(self):
        from .io import matrix_to_json
        return {"form": self.form, "M": matrix_to_json(self.M)}


@dataclass(frozen=True)
class StructureClass:
    kind: Kind
    field: str = "complex"
    scalar_product: Optional[ScalarProduct] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.field not in ("real", "complex"):
            raise ValueError(f"unknown field {self.field!r}")
        if self.kind in (Kind.HERM, Kind.SKEWHERM) and self.field != "complex":
            raise ValueError(f"{self.kind.value} requires the complex field")
        if self.kind in (Kind.JORDAN, Kind.LIE):
            if not isinstance(self.scalar_product, ScalarProduct):
                raise ValueError(f"{self.kind.value} needs a ScalarProduct")
            if self.field == "real" and np.iscomplexobj(self.scalar_product.M) \
                    and np.any(self.scalar_product.M.imag != 0):
                raise ValueError("real-field algebra needs a real M")
        elif self.scalar_product is not None:
            raise ValueError("prototype classes take no scalar product")

    @property
    def is_prototype(self):
        return self.kind in PROTOTYPES

    @property
    def sign(self):
        return _SIGN[self.kind]

    @property
    def name(self):
        if self.is_prototype:
            suffix = {"real": "-R", "complex": "-C"}[self.field] if self.kind in (Kind.SYM, Kind.SKEWSYM) else ""
            return self.kind.value + suffix
        return f"{self.kind.value}({self.scalar_product.form})"

    def check_field(self, *arrays):
        if self.field == "real":
            for a in arrays:
                if np.iscomplexobj(a) and np.any(np.asarray(a).imag != 0):
                    raise ValueError(f"{self.name} is a real-field class but got complex input")

    @classmethod
    def jordan(cls, M, form="bilinear", field="complex"):
        return cls(Kind.JORDAN, field, ScalarProduct(np.asarray(M), form))

    @classmethod
    def lie(cls, M, form="bilinear", field="complex"):
        return cls(Kind.LIE, field, ScalarProduct(np.asarray(M), form))


def adjoint(A, sp):
    """Adjoint w.r.t. ``sp``: ``M^-1 A^T M`` or ``M^-1 A^H M`` with ``M^-1 = M^H``."""
    A = as_matrix(A, "A")
    if A.shape != (sp.n, sp.n):
        raise ValueError(f"A has shape {A.shape}, scalar product has dimension {sp.n}")
    At = A.T if sp.form == "bilinear" else A.conj().T
    return sp.M.conj().T @ At @ sp.M


def class_adjoint(A, S):
    """The adjoint defining ``S``: ``A^T``/``A^H`` for prototypes."""
    A = np.asarray(A)
    if S.kind in (Kind.SYM, Kind.SKEWSYM):
        return A.T
    if S.kind in (Kind.HERM, Kind.SKEWHERM):
        return A.conj().T
    return adjoint(A, S.scalar_product)


def membership_defect(A, S):
    """``||A* - sign * A||_F``, plus the imaginary part for real-field classes."""
    A = as_matrix(A, "A")
    if A.shape[0] != A.shape[1]:
        raise ValueError("A must be square")
    defect = frobenius_norm(class_adjoint(A, S) - S.sign * A)
    if S.field == "real" and np.iscomplexobj(A):
        defect = float(np.hypot(defect, frobenius_norm(A.imag)))
    return defect


def is_member(A, S, tol=MEMBER_TOL):
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    return membership_defect(A, S) <= tol * (1.0 + frobenius_norm(A))


def structured_project(A, S):
    """Nearest member of ``S`` in Frobenius norm, ``(A + sign * A*) / 2``."""
    A = as_matrix(A, "A")
    if S.field == "real":
        A = A.real
    P = 0.5 * (A + S.sign * class_adjoint(A, S))
    return P


def orthonormal_basis(S, n):
    """Basis of the prototype class ``S`` in dimension ``n`` as a real vector space.

    The basis is orthonormal for ``re Tr(A^H B)``.  Jordan / Lie classes must
    be reduced to a prototype first.
    """
    if not S.is_prototype:
        raise ValueError("orthonormal_basis only handles prototype classes")
    if n < 1:
        raise ValueError("n must be >= 1")
    r2 = 1.0 / np.sqrt(2.0)

    def unit(i, j):
        E = np.zeros((n, n), dtype=complex)
        E[i, j] = 1.0
        return E

    diag = [unit(i, i) for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    sym_off = [r2 * (unit(i, j) + unit(j, i)) for i, j in pairs]
    skew_off = [r2 * (unit(i, j) - unit(j, i)) for i, j in pairs]

    if S.kind == Kind.SYM:
        real = diag + sym_off
    elif S.kind == Kind.SKEWSYM:
        real = skew_off
    elif S.kind == Kind.HERM:
        return diag + sym_off + [1j * E for E in skew_off]
    else:
        return [1j * E for E in diag + sym_off] + skew_off
    if S.field == "real":
        return [E.real for E in real]
    return real + [1j * E for E in real]


def block_frobenius_identity_check(A, r, tol=1e-12):
    """Check ``||A||_F^2 = 2||A[:, :r]||_F^2 - ||A11||_F^2 + ||A22||_F^2``.

    Holds for every prototype-structured ``A`` since its off-diagonal blocks
    are (conjugate) transposes of each other up to sign.
    """
    A = as_matrix(A, "A")
    n = A.shape[0]
    if not 0 <= r <= n:
        raise ValueError("split must satisfy 0 <= r <= n")
    lhs = frobenius_norm(A)
    rhs2 = 2 * frobenius_norm(A[:, :r]) ** 2 - frobenius_norm(A[:r, :r]) ** 2 \
        + frobenius_norm(A[r:, r:]) ** 2
    rhs = np.sqrt(max(rhs2, 0.0))
    return abs(lhs - rhs) <= tol * (1.0 + lhs)
