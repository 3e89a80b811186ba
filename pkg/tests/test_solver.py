import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import PROTO_CLASSES, instance, rand, rand_contraction_member, rand_member
from structlsq import (StructureClass, core, is_member, min_frobenius, min_spectral_family,
                       oracle_solve, residual, rho, sigma_spectral, solution_family, solve)
from structlsq.numlin import frobenius_norm, spectral_norm
from structlsq.oracle import spectral_floor_check
from structlsq.solver import f_term, free_block_shape, reduced_core, scalar_min

SYM = PROTO_CLASSES["sym-R"]
SKEW = PROTO_CLASSES["skewsym-R"]
HERM = PROTO_CLASSES["herm"]
E12 = np.array([[0.0, 1.0], [0.0, 0.0]])


# -- scalar minimizer --------------------------------------------------------

@pytest.mark.parametrize("args, expected", [((1, 0, 5, 7), 5), ((1, 1, 1, 3), 2)])
def test_scalar_min_examples(args, expected):
    assert scalar_min(*args) == pytest.approx(expected)


def test_scalar_min_against_grid():
    grid = np.linspace(0, 5, 500001)
    f = (2 * grid - 4) ** 2 + (grid - 3) ** 2
    assert scalar_min(2, 1, 4, 3) == pytest.approx(2.2)
    assert grid[np.argmin(f)] == pytest.approx(2.2, abs=1e-5)


def test_scalar_min_complex_and_error():
    x = scalar_min(1.0, 2.0, 1j, 2 + 1j)
    grad = (x - 1j) + 2 * (2 * x - (2 + 1j))
    assert abs(grad) < 1e-14
    with pytest.raises(ValueError):
        scalar_min(0, 0, 1, 1)


# -- core and rho ------------------------------------------------------------

def test_core_nearest_symmetric():
    c = core(SYM, np.eye(2), E12)
    np.testing.assert_allclose(c.A11, [[0, 0.5], [0.5, 0]])
    assert c.A12.shape == (0, 2)
    assert c.rho == pytest.approx(1 / np.sqrt(2))


def test_core_skew_of_identity():
    c = core(SKEW, np.eye(2), np.eye(2))
    np.testing.assert_allclose(c.A11, 0, atol=1e-15)
    assert c.rho == pytest.approx(np.sqrt(2))


def test_core_herm_random_vs_oracle():
    rng = np.random.default_rng(0)
    X, B = rand(rng, (4, 3)), rand(rng, (4, 3))
    assert core(HERM, X, B).rho == pytest.approx(oracle_solve(HERM, X, B).rho, rel=1e-10)


def test_core_rejects_general_classes_and_field_mismatch():
    with pytest.raises(ValueError):
        core(PROTO_CLASSES["skewherm"], np.eye(2), np.eye(2))
    with pytest.raises(ValueError):
        core(SYM, np.eye(2), 1j * np.eye(2))


def test_core_x_zero():
    B = np.arange(6.0).reshape(3, 2)
    c = core(SYM, np.zeros((3, 2)), B)
    assert c.rank == 0 and c.A11.shape == (0, 0) and c.A12.shape == (3, 0)
    assert c.rho == pytest.approx(np.linalg.norm(B))


@pytest.mark.parametrize("name", list(PROTO_CLASSES))
def test_exact_block_structure(name):
    rng = np.random.default_rng(1)
    S = PROTO_CLASSES[name]
    for _ in range(10):
        X, B = instance(rng, S, n=5, p=3)
        rp, c = reduced_core(S, X, B)
        if c.proto.name.startswith("skewsym"):
            assert np.all(np.diag(c.A11) == 0)
        if c.proto.name == "herm":
            assert np.all(np.diag(c.A11).imag == 0)
        assert is_member(c.A11, c.proto)


def test_rho_examples():
    rng = np.random.default_rng(2)
    Bs = rand(rng, (3, 3), False)
    assert rho(SYM, np.eye(3), Bs + Bs.T) == pytest.approx(0, abs=1e-14)
    B = rand(rng, (4, 2))
    assert rho(HERM, np.zeros((4, 2)), B) == pytest.approx(np.linalg.norm(B))


@pytest.mark.parametrize("name", ["sym-R", "skewsym-R", "herm", "skewherm"])
def test_rho_random_vs_oracle(name):
    rng = np.random.default_rng(3)
    S = PROTO_CLASSES[name]
    X, B = instance(rng, S, n=5, p=3, drop=0)
    assert rho(S, X, B) == pytest.approx(oracle_solve(S, X, B).rho, rel=1e-10)


# -- family ------------------------------------------------------------------

def test_family_zero_is_f_term():
    A = solution_family(SYM, np.eye(2), E12)
    np.testing.assert_allclose(A, (E12 + E12.T) / 2)
    A0 = solution_family(SYM, np.eye(2), E12, Z=np.zeros((2, 2)))
    np.testing.assert_allclose(A0, A)


def test_family_full_row_rank_is_a_point():
    rng = np.random.default_rng(4)
    X, B = rand(rng, (3, 5)), rand(rng, (3, 5))
    A0 = solution_family(HERM, X, B)
    for _ in range(3):
        A = solution_family(HERM, X, B, Z=rand_member(rng, HERM, 3))
        np.testing.assert_allclose(A, A0, atol=1e-12)


def test_f_term_equals_block_assembly():
    rng = np.random.default_rng(5)
    for name, S in PROTO_CLASSES.items():
        X, B = instance(rng, S, n=6, p=3, drop=1)
        rp, c = reduced_core(S, X, B)
        np.testing.assert_allclose(f_term(c), c.assemble(), atol=1e-12)


@pytest.mark.parametrize("name", list(PROTO_CLASSES))
def test_family_residual_and_membership(name):
    rng = np.random.default_rng(6)
    S = PROTO_CLASSES[name]
    for _ in range(15):
        X, B = instance(rng, S)
        n = X.shape[0]
        r = rho(S, X, B)
        A = solution_family(S, X, B, Z=rand_member(rng, S, n, scale=3.0))
        assert residual(A, X, B) == pytest.approx(r, abs=1e-10 * (1 + np.linalg.norm(B)))
        assert is_member(A, S)


def test_family_rejects_nonmember_and_sanitizes():
    Z = np.array([[0.0, 1.0], [0.0, 0.0]])
    X = np.array([[1.0], [0.0]])
    with pytest.raises(ValueError):
        solution_family(SYM, X, X, Z=Z)
    A = solution_family(SYM, X, X, Z=Z, sanitize=True)
    assert is_member(A, SYM)
    with pytest.raises(ValueError):
        solution_family(SYM, X, X, Z=np.zeros((3, 3)))


# -- minimal Frobenius -------------------------------------------------------

def test_min_frobenius_examples():
    sol = min_frobenius(SYM, np.eye(2), E12)
    np.testing.assert_allclose(sol.A, [[0, 0.5], [0.5, 0]])
    assert sol.sigma == pytest.approx(1 / np.sqrt(2)) and sol.unique
    sol = min_frobenius(HERM, np.zeros((3, 2)), np.ones((3, 2)))
    np.testing.assert_array_equal(sol.A, 0)
    assert sol.sigma == 0 and sol.rho == pytest.approx(np.sqrt(6))


@pytest.mark.parametrize("name", list(PROTO_CLASSES))
def test_min_frobenius_vs_oracle(name):
    rng = np.random.default_rng(7)
    S = PROTO_CLASSES[name]
    for _ in range(10):
        X, B = instance(rng, S)
        sol = min_frobenius(S, X, B)
        ref = oracle_solve(S, X, B)
        assert frobenius_norm(sol.A - ref.A_min_fro) <= 1e-8 * (1 + frobenius_norm(ref.A_min_fro))
        assert sol.sigma == pytest.approx(frobenius_norm(ref.A_min_fro), abs=1e-10)
        assert sol.class_resolved in {"sym-R", "sym-C", "skewsym-R", "skewsym-C", "herm"}


def test_real_inputs_give_real_outputs():
    rng = np.random.default_rng(8)
    X, B = rand(rng, (4, 2), False), rand(rng, (4, 2), False)
    for S in (SYM, SKEW):
        assert not np.iscomplexobj(min_frobenius(S, X, B).A)
        assert not np.iscomplexobj(min_spectral_family(S, X, B, Z=np.eye(2) if S is SYM else None).A)


# -- minimal spectral --------------------------------------------------------

def test_sigma_spectral_examples():
    assert sigma_spectral(SYM, np.eye(2), E12) == pytest.approx(0.5)
    assert sigma_spectral(SYM, np.zeros((2, 1)), np.ones((2, 1))) == 0


def test_spectral_full_row_rank_is_min_frobenius():
    rng = np.random.default_rng(9)
    X, B = rand(rng, (3, 4)), rand(rng, (3, 4))
    sol = min_spectral_family(HERM, X, B)
    assert sol.unique
    np.testing.assert_allclose(sol.A, min_frobenius(HERM, X, B).A)
    assert spectral_norm(sol.A) == pytest.approx(sol.mu)


def test_spectral_tight_vector_example():
    x = np.array([[1.0], [0.0]])
    b = np.array([[0.0], [1.0]])
    sol = min_spectral_family(HERM, x + 0j, b + 0j)
    np.testing.assert_allclose(sol.A, [[0, 1], [1, 0]], atol=1e-12)
    assert sol.mu == pytest.approx(1.0) and sol.unique


@pytest.mark.parametrize("name", list(PROTO_CLASSES))
def test_spectral_family_norm_and_residual(name):
    rng = np.random.default_rng(10)
    S = PROTO_CLASSES[name]
    for _ in range(8):
        X, B = instance(rng, S, n=int(rng.integers(2, 8)), p=int(rng.integers(1, 4)))
        rp, c = reduced_core(S, X, B)
        k = free_block_shape(S, X)[0]
        mu = sigma_spectral(S, X, B)
        r = rho(S, X, B)
        for _ in range(5):
            Z = rand_contraction_member(rng, c.proto, k)
            sol = min_spectral_family(S, X, B, Z=Z)
            assert sol.mu == mu
            assert abs(spectral_norm(sol.A) - mu) <= 1e-9 * (1 + mu)
            assert residual(sol.A, X, B) == pytest.approx(r, abs=1e-10 * (1 + np.linalg.norm(B)))
            assert is_member(sol.A, S)
            assert spectral_floor_check(c, sol.A)


def test_spectral_full_size_z_in_original_class():
    rng = np.random.default_rng(11)
    S = PROTO_CLASSES["skewherm"]
    X, B = instance(rng, S, n=5, p=2, drop=0)
    Z = rand_member(rng, S, 5)
    Z = Z / spectral_norm(Z)
    sol = min_spectral_family(S, X, B, Z=Z)
    assert spectral_norm(sol.A) == pytest.approx(sol.mu, rel=1e-9)
    assert is_member(sol.A, S)


def test_spectral_multiplicity():
    rng = np.random.default_rng(12)
    X, B = rand(rng, (5, 2)), rand(rng, (5, 2))
    k = free_block_shape(HERM, X)[0]
    sols = [min_spectral_family(HERM, X, B, Z=rand_contraction_member(rng, HERM, k)) for _ in range(2)]
    assert not sols[0].unique
    assert frobenius_norm(sols[0].A - sols[1].A) > 1e-6
    assert spectral_norm(sols[0].A) == pytest.approx(spectral_norm(sols[1].A), rel=1e-9)


def test_spectral_z_validation():
    rng = np.random.default_rng(13)
    X, B = rand(rng, (4, 2)), rand(rng, (4, 2))
    with pytest.raises(ValueError):
        min_spectral_family(HERM, X, B, Z=np.array([[0, 1], [0, 0]], dtype=complex))
    with pytest.raises(ValueError):
        min_spectral_family(HERM, X, B, Z=3 * np.eye(2))
    with pytest.raises(ValueError):
        min_spectral_family(HERM, X, B, Z=np.eye(3))
    sol = min_spectral_family(HERM, X, B, Z=3 * np.array([[0, 1], [0, 0]], dtype=complex), sanitize=True)
    assert spectral_norm(sol.A) == pytest.approx(sol.mu, rel=1e-9)


def test_solve_dispatch():
    sol = solve(SYM, np.eye(2), E12, norm="spec")
    assert sol.norm_kind == "spectral"
    assert solve(SYM, np.eye(2), E12).norm_kind == "frobenius"
    with pytest.raises(ValueError):
        solve(SYM, np.eye(2), E12, norm="nuclear")


def test_rtol_truncates_rank():
    X = np.diag([1.0, 1e-6, 0.0])[:, :2]
    B = np.ones((3, 2))
    assert reduced_core(SYM, X, B, rtol=1e-3)[1].rank == 1
    assert reduced_core(SYM, X, B)[1].rank == 2


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(PROTO_CLASSES)), st.integers(1, 6), st.integers(1, 4),
       st.integers(0, 2), st.integers(0, 2**31))
def test_minimality_properties(name, n, p, drop, seed):
    rng = np.random.default_rng(seed)
    S = PROTO_CLASSES[name]
    X, B = instance(rng, S, n, p, drop)
    fro = min_frobenius(S, X, B)
    A = solution_family(S, X, B, Z=rand_member(rng, S, n))
    assert frobenius_norm(A) >= fro.sigma - 1e-10 * (1 + fro.sigma)
    assert spectral_norm(A) >= sigma_spectral(S, X, B) - 1e-9
    assert frobenius_norm(fro.A) == pytest.approx(fro.sigma, abs=1e-10 * (1 + fro.sigma))


def test_general_class_solve():
    rng = np.random.default_rng(14)
    J = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])
    S = StructureClass.lie(J, "bilinear", "real")
    X, B = rand(rng, (4, 2), False), rand(rng, (4, 2), False)
    sol = min_frobenius(S, X, B)
    assert is_member(sol.A, S)
    assert sol.class_resolved == "sym-R"
    assert sol.rho == pytest.approx(oracle_solve(S, X, B).rho, abs=1e-10)


def test_skew_family_collapses_when_root_has_rank_one():
    # one column in R^3: the free block is 2x2 but (I - K K^H) has rank 1,
    # and R Z R^T vanishes for every skew Z when R has rank 1
    rng = np.random.default_rng(15)
    x, b = rand(rng, (3, 1), False), rand(rng, (3, 1), False)
    sols = [min_spectral_family(SKEW, x, b, Z=np.array([[0.0, t], [-t, 0.0]])) for t in (0.0, 0.5, 1.0)]
    assert all(s.unique for s in sols)
    for s in sols[1:]:
        np.testing.assert_allclose(s.A, sols[0].A, atol=1e-12)
    lam = np.linalg.eigvalsh(np.eye(2) - sols[0].K @ sols[0].K.conj().T)
    assert lam[0] == pytest.approx(0, abs=1e-12) and lam[1] > 0.1
