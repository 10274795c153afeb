import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from starkbat.ergotropy import ergotropy, passive_energy
from starkbat.fock import enumerate_boson_basis, enumerate_fermion_basis
from starkbat.hamiltonians import (HermitianOperator, HubbardParams, build_hamiltonian,
                                   normalize_spectrum)
from starkbat.states import DensityState, gibbs_state, ground_state, top_state


def random_state(rng, dim, rank=None):
    rank = rank or dim
    A = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = A @ A.conj().T
    return rho / np.trace(rho).real


def random_hermitian(rng, dim):
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return HermitianOperator(0.5 * (A + A.conj().T))


def brute_force_passive(rho, H):
    # minimize sum_k p_sigma(k) E_k over all pairings of populations and levels
    p = np.linalg.eigvalsh(rho)
    E = np.linalg.eigvalsh(H.matrix)
    return min(float(np.dot(p[list(perm)], E)) for perm in itertools.permutations(range(len(p))))


def test_ground_state_pure_for_nondegenerate_level():
    H = build_hamiltonian(enumerate_boson_basis(3, 3), HubbardParams(J=1, U=2))
    rho = ground_state(H)
    rho.validate()
    assert rho.purity == pytest.approx(1.0)


def test_degenerate_ground_level_is_mixed():
    H = HermitianOperator(np.diag([0.0, 0.0, 1.0]))
    rho = ground_state(H)
    np.testing.assert_allclose(rho.matrix, np.diag([0.5, 0.5, 0]))
    np.testing.assert_allclose(top_state(HermitianOperator(np.diag([0.0, 2, 2]))).matrix,
                               np.diag([0, 0.5, 0.5]))


def test_gibbs_limits():
    H = build_hamiltonian(enumerate_fermion_basis(2, 1, 1), HubbardParams(J=1, U=1))
    np.testing.assert_allclose(gibbs_state(H, 0.0).matrix, np.eye(4) / 4, atol=1e-14)
    np.testing.assert_allclose(gibbs_state(H, 1e4).matrix, ground_state(H).matrix, atol=1e-10)
    gibbs_state(H, 1e6).validate()
    with pytest.raises(ValueError):
        gibbs_state(H, -1.0)


def test_validate_rejects_bad_states():
    with pytest.raises(ValueError):
        DensityState(np.diag([0.7, 0.7])).validate()
    with pytest.raises(ValueError):
        DensityState(np.diag([1.2, -0.2])).validate()
    with pytest.raises(ValueError):
        DensityState(np.array([[0.5, 0.1], [0.3, 0.5]])).validate()


def test_ergotropy_of_passive_and_active_states():
    H = normalize_spectrum(build_hamiltonian(enumerate_fermion_basis(4, 2, 2),
                                             HubbardParams(1, 1, 1)))
    assert ergotropy(ground_state(H), H).ergotropy < 1e-10
    assert ergotropy(gibbs_state(H, 0.7), H).ergotropy < 1e-10
    assert ergotropy(top_state(H), H).ergotropy == pytest.approx(2.0, abs=1e-10)


def test_passive_energy_rejects_mismatch():
    H = HermitianOperator(np.diag([0.0, 1.0]))
    with pytest.raises(ValueError):
        passive_energy(np.eye(3) / 3, H)
    with pytest.raises(ValueError):
        passive_energy(np.eye(2), H)


@pytest.mark.parametrize("dim", [2, 3, 4, 5])
def test_passive_energy_matches_permutation_search(dim):
    rng = np.random.default_rng(dim)
    for _ in range(5):
        rho = random_state(rng, dim)
        H = random_hermitian(rng, dim)
        assert passive_energy(rho, H) == pytest.approx(brute_force_passive(rho, H), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), dim=st.integers(2, 8), rank=st.integers(1, 8))
def test_ergotropy_bounds(seed, dim, rank):
    rng = np.random.default_rng(seed)
    rho = random_state(rng, dim, min(rank, dim))
    H = random_hermitian(rng, dim)
    res = ergotropy(rho, H)
    w = np.linalg.eigvalsh(H.matrix)
    assert -1e-10 <= res.ergotropy <= w[-1] - w[0] + 1e-10
    assert res.state_energy - res.passive_energy == pytest.approx(res.ergotropy, abs=1e-10)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), dim=st.integers(2, 6))
def test_ergotropy_unitary_invariant_for_commuting_rotation(seed, dim):
    # passive energy depends only on the spectrum of rho
    rng = np.random.default_rng(seed)
    rho = random_state(rng, dim)
    H = random_hermitian(rng, dim)
    Q, _ = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    rotated = Q @ rho @ Q.conj().T
    assert passive_energy(rotated, H) == pytest.approx(passive_energy(rho, H), abs=1e-10)
