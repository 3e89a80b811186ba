"""Random instance generators shared by the test modules."""

import numpy as np

from structlsq import StructureClass, structured_project

PROTO_CLASSES = {
    "sym-R": StructureClass("sym", "real"),
    "sym-C": StructureClass("sym", "complex"),
    "skewsym-R": StructureClass("skewsym", "real"),
    "skewsym-C": StructureClass("skewsym", "complex"),
    "herm": StructureClass("herm", "complex"),
    "skewherm": StructureClass("skewherm", "complex"),
}


def rand(rng, shape, complex_=True):
    A = rng.standard_normal(shape)
    if complex_:
        A = A + 1j * rng.standard_normal(shape)
    return A


def rand_X(rng, n, p, complex_=True, drop=None):
    """``n x p`` data matrix; ``drop`` forces rank ``min(n, p) - drop``."""
    if drop is None:
        drop = int(rng.integers(0, 3)) if rng.random() < 0.5 else 0
    r = max(min(n, p) - drop, 0)
    if r == min(n, p):
        return rand(rng, (n, p), complex_)
    if r == 0:
        return np.zeros((n, p), dtype=complex if complex_ else float)
    return rand(rng, (n, r), complex_) @ rand(rng, (r, p), complex_)


def instance(rng, S, n=None, p=None, drop=None):
    n = int(rng.integers(1, 9)) if n is None else n
    p = int(rng.integers(1, 6)) if p is None else p
    cplx = S.field == "complex"
    return rand_X(rng, n, p, cplx, drop), rand(rng, (n, p), cplx)


def rand_member(rng, S, n, scale=1.0):
    return scale * structured_project(rand(rng, (n, n), S.field == "complex"), S)


def rand_contraction_member(rng, S, k):
    """Random member of ``S`` with spectral norm in (0, 1]."""
    if k == 0:
        return np.zeros((0, 0))
    Z = structured_project(rand(rng, (k, k), S.field == "complex"), S)
    nz = np.linalg.norm(Z, 2)
    if nz == 0:
        return Z
    return Z / nz * rng.uniform(0.2, 1.0)


def symplectic_J(m):
    return np.block([[np.zeros((m, m)), np.eye(m)], [-np.eye(m), np.zeros((m, m))]])


def rand_hermitian_unitary(rng, n, complex_=True):
    Q, _ = np.linalg.qr(rand(rng, (n, n), complex_))
    d = rng.choice([-1.0, 1.0], n)
    M = (Q * d) @ Q.conj().T
    return 0.5 * (M + M.conj().T)
