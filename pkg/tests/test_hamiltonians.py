import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from starkbat.fock import enumerate_boson_basis, enumerate_fermion_basis
from starkbat.hamiltonians import (HermitianOperator, HubbardParams, build_bose_hubbard,
                                   build_fermi_hubbard, build_hamiltonian, eigendecompose,
                                   normalize_spectrum)


def test_two_boson_matrix():
    b = enumerate_boson_basis(2, 2)
    J, U, r = 0.7, 1.3, 0.4
    H = build_bose_hubbard(b, HubbardParams(J, U, r)).matrix
    s2 = np.sqrt(2) * J
    expected = np.array([[U - 4 * r, -s2, 0],
                         [-s2, -3 * r, -s2],
                         [0, -s2, U - 2 * r]])
    np.testing.assert_allclose(H, expected, atol=1e-14)


def test_stark_onsite_diagonal_for_two_bosons():
    b = enumerate_boson_basis(2, 2)
    H = build_bose_hubbard(b, HubbardParams(U=1.0, r=1.0)).matrix
    np.testing.assert_allclose(np.diag(H).real, [1 - 4, -3, 1 - 2])


def test_two_fermion_matrix_all_couplings_minus_J():
    b = enumerate_fermion_basis(2, 1, 1)
    J = 1.0
    H = build_fermi_hubbard(b, HubbardParams(J=J)).matrix
    off = H - np.diag(np.diag(H))
    nz = off[np.abs(off) > 0]
    assert nz.size == 8
    np.testing.assert_allclose(nz, -J)
    # ground state has all positive amplitudes
    v = eigendecompose(HermitianOperator(H, b)).eigenvectors[:, 0]
    v = v * np.sign(v[np.argmax(np.abs(v))].real)
    assert np.all(v.real > 0)


def test_fermion_onsite_counts_double_occupancy():
    b = enumerate_fermion_basis(2, 1, 1)
    H = build_fermi_hubbard(b, HubbardParams(U=2.5)).matrix
    diag = np.diag(H).real
    for k, (up, down) in enumerate(b.configs):
        assert diag[k] == pytest.approx(2.5 * sum(u * d for u, d in zip(up, down)))


def test_single_particle_ground_energy():
    for N in (2, 5, 10):
        b = enumerate_boson_basis(N, 1)
        H = build_bose_hubbard(b, HubbardParams(J=1.0))
        assert eigendecompose(H).E_min == pytest.approx(-2 * np.cos(np.pi / (N + 1)), abs=1e-12)


def test_orderings_give_same_spectrum():
    p = HubbardParams(J=1.0, U=2.0, r=0.3)
    a = build_fermi_hubbard(enumerate_fermion_basis(3, 2, 1), p)
    b = build_fermi_hubbard(enumerate_fermion_basis(3, 2, 1, ordering="site_major"), p)
    np.testing.assert_allclose(eigendecompose(a).eigenvalues, eigendecompose(b).eigenvalues,
                               atol=1e-12)


def test_wrong_statistics_rejected():
    with pytest.raises(TypeError):
        build_bose_hubbard(enumerate_fermion_basis(2, 1, 1), HubbardParams(J=1))
    with pytest.raises(TypeError):
        build_fermi_hubbard(enumerate_boson_basis(2, 1), HubbardParams(J=1))


def test_non_hermitian_and_bad_params_rejected():
    with pytest.raises(ValueError):
        HermitianOperator(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        HubbardParams(J=np.nan)


def test_normalization_examples():
    H = normalize_spectrum(HermitianOperator(np.diag([0.0, 1.0, 3.0])))
    np.testing.assert_allclose(np.diag(H.matrix).real, [-1, -1 / 3, 1], atol=1e-15)
    with pytest.raises(ValueError):
        normalize_spectrum(HermitianOperator(np.eye(3)))


def test_normalized_spectrum_endpoints_and_eigenvectors():
    b = enumerate_fermion_basis(4, 2, 2)
    H = build_hamiltonian(b, HubbardParams(1.0, 1.0, 1.0))
    Hn = normalize_spectrum(H)
    w = np.linalg.eigvalsh(Hn.matrix)
    assert w[0] == pytest.approx(-1, abs=1e-12) and w[-1] == pytest.approx(1, abs=1e-12)
    spec = eigendecompose(Hn)
    V = spec.eigenvectors
    np.testing.assert_allclose(V @ np.diag(spec.eigenvalues) @ V.conj().T, Hn.matrix, atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(J=st.floats(-3, 3), U=st.floats(-3, 3), r=st.floats(-3, 3), scale=st.floats(0.1, 10))
def test_normalization_is_scale_invariant(J, U, r, scale):
    b = enumerate_boson_basis(3, 2)
    H = build_bose_hubbard(b, HubbardParams(J, U, r))
    if eigendecompose(H).width < 1e-6:
        return
    Hs = build_bose_hubbard(b, HubbardParams(J, U, r).scaled(scale))
    np.testing.assert_allclose(normalize_spectrum(H).matrix, normalize_spectrum(Hs).matrix,
                               atol=1e-9)


@settings(max_examples=25, deadline=None)
@given(J=st.floats(-3, 3), U=st.floats(-3, 3), r=st.floats(-3, 3))
def test_spectrum_reconstruction(J, U, r):
    b = enumerate_fermion_basis(3, 2, 1)
    H = build_fermi_hubbard(b, HubbardParams(J, U, r))
    spec = eigendecompose(H)
    V = spec.eigenvectors
    np.testing.assert_allclose(V @ np.diag(spec.eigenvalues) @ V.conj().T, H.matrix, atol=1e-10)
    assert np.all(np.diff(spec.eigenvalues) >= 0)
