import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from starkbat.fock import (DOWN, UP, InfeasibleSectorError, boson_hop_element,
                           boson_ladder_matrices, enumerate_boson_basis,
                           enumerate_fermion_basis, fermion_hop_element,
                           fermion_ladder_matrices, hopping_matrix, number_operator)


def brute_force_boson_count(N, n, cap):
    return sum(1 for occ in itertools.product(range(cap + 1), repeat=N) if sum(occ) == n)


def test_two_site_two_boson_basis():
    b = enumerate_boson_basis(2, 2)
    assert b.configs == ((0, 2), (1, 1), (2, 0))
    assert b.index[(1, 1)] == 1


def test_vacuum_and_dims():
    assert enumerate_boson_basis(1, 0).configs == ((0,),)
    assert enumerate_boson_basis(4, 4, 2).dim == 19
    assert enumerate_fermion_basis(2, 1, 1).dim == 4
    assert enumerate_fermion_basis(4, 2, 2).dim == 36
    assert enumerate_fermion_basis(3, 0, 0).dim == 1


@pytest.mark.parametrize("N", range(1, 7))
@pytest.mark.parametrize("n", range(0, 7))
def test_boson_dim_matches_brute_force(N, n):
    expected = brute_force_boson_count(N, n, 2)
    if expected == 0:
        with pytest.raises(InfeasibleSectorError):
            enumerate_boson_basis(N, n, 2)
    else:
        assert enumerate_boson_basis(N, n, 2).dim == expected


def test_infeasible_sectors_raise():
    with pytest.raises(InfeasibleSectorError):
        enumerate_boson_basis(2, 5, 2)
    with pytest.raises(InfeasibleSectorError):
        enumerate_fermion_basis(2, 3, 0)


def test_enumeration_is_deterministic():
    a = enumerate_fermion_basis(4, 2, 1)
    b = enumerate_fermion_basis(4, 2, 1)
    assert a.configs == b.configs and a.index == b.index


def test_boson_hop_elements():
    b = enumerate_boson_basis(2, 2)
    target, amp = boson_hop_element(b, 0, 1, b.index[(1, 1)])
    assert b.configs[target] == (2, 0)
    assert amp == pytest.approx(np.sqrt(2))
    # b_1^dag b_2 on (0,2) also carries sqrt(2)
    target, amp = boson_hop_element(b, 0, 1, b.index[(0, 2)])
    assert b.configs[target] == (1, 1) and amp == pytest.approx(np.sqrt(2))
    # cap blocks the move into a full site
    assert boson_hop_element(b, 0, 1, b.index[(2, 0)]) is None
    with pytest.raises(IndexError):
        boson_hop_element(b, 0, 2, 0)


def test_boson_hop_from_empty_site():
    b = enumerate_boson_basis(3, 1)
    assert boson_hop_element(b, 0, 2, b.index[(1, 0, 0)]) is None


def test_fermion_single_particle_hop_sign():
    b = enumerate_fermion_basis(2, 1, 0)
    src = b.index[((1, 0), (0, 0))]
    target, sign = fermion_hop_element(b, 1, 0, UP, src)
    assert b.configs[target] == ((0, 1), (0, 0))
    assert sign == 1


def test_fermion_pauli_block():
    b = enumerate_fermion_basis(2, 2, 0)
    assert fermion_hop_element(b, 0, 1, UP, 0) is None


def test_site_major_ordering_produces_signs():
    # with up/down interleaved, hopping an up spin past an occupied down mode flips sign
    b = enumerate_fermion_basis(2, 1, 1, ordering="site_major")
    src = b.index[((0, 1), (1, 0))]
    _, sign = fermion_hop_element(b, 0, 1, UP, src)
    assert sign == -1
    b2 = enumerate_fermion_basis(2, 1, 1)
    _, sign = fermion_hop_element(b2, 0, 1, UP, b2.index[((0, 1), (1, 0))])
    assert sign == 1


@pytest.mark.parametrize("ordering", ["spin_major", "site_major"])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_fermion_anticommutators(N, ordering):
    _, cs = fermion_ladder_matrices(N, ordering)
    dim = cs[0].shape[0]
    eye = np.eye(dim)
    for a, ca in enumerate(cs):
        for b, cb in enumerate(cs):
            np.testing.assert_array_equal(ca @ cb.T + cb.T @ ca, eye * (a == b))
            np.testing.assert_array_equal(ca @ cb + cb @ ca, np.zeros_like(eye))


@pytest.mark.parametrize("ordering", ["spin_major", "site_major"])
def test_hop_elements_agree_with_ladder_products(ordering):
    N = 3
    modes, cs = fermion_ladder_matrices(N, ordering)
    bases = [enumerate_fermion_basis(N, u, d, ordering) for u in range(N + 1) for d in range(N + 1)]
    full = [c for bb in bases for c in bb.configs]
    pos = {c: k for k, c in enumerate(full)}
    mode_index = {m: k for k, m in enumerate(modes)}
    basis = enumerate_fermion_basis(N, 2, 1, ordering)
    for spin in (UP, DOWN):
        for i, j in [(0, 1), (1, 0), (1, 2), (2, 1)]:
            op = cs[mode_index[(i, spin)]].T @ cs[mode_index[(j, spin)]]
            for k, cfg in enumerate(basis.configs):
                hit = fermion_hop_element(basis, i, j, spin, k)
                col = op[:, pos[cfg]]
                if hit is None:
                    assert not col.any()
                else:
                    assert col[pos[basis.configs[hit[0]]]] == hit[1]


def test_boson_commutator_on_unsaturated_configs():
    cap = 2
    configs, bs = boson_ladder_matrices(2, cap)
    for a, ba in enumerate(bs):
        for b, bb in enumerate(bs):
            comm = ba @ bb.T - bb.T @ ba
            for k, cfg in enumerate(configs):
                if max(cfg) < cap:
                    expected = np.zeros(len(configs))
                    expected[k] = float(a == b)
                    np.testing.assert_allclose(comm[:, k], expected, atol=1e-12)
    # truncation shows up on saturated configurations only
    comm = bs[0] @ bs[0].T - bs[0].T @ bs[0]
    k = configs.index((2, 0))
    assert comm[k, k] == pytest.approx(-2.0)


def test_half_filled_sector_closed_under_hopping():
    b = enumerate_fermion_basis(4, 2, 2)
    for k in range(b.dim):
        for i in range(3):
            for spin in (UP, DOWN):
                for src, dst in ((i, i + 1), (i + 1, i)):
                    hit = fermion_hop_element(b, dst, src, spin, k)
                    if hit is not None:
                        up, down = b.configs[hit[0]]
                        assert sum(up) == 2 and sum(down) == 2


def test_number_operators():
    b = enumerate_boson_basis(2, 2)
    np.testing.assert_array_equal(np.diag(number_operator(b, 0)).real, [0, 1, 2])
    total = sum(number_operator(b, i) for i in range(2))
    np.testing.assert_array_equal(total, 2 * np.eye(3))
    f = enumerate_fermion_basis(3, 2, 1)
    edge = np.diag(number_operator(f, 0)).real
    assert set(edge) <= {0.0, 1.0, 2.0}
    expected = [c[0][0] + c[1][0] for c in f.configs]
    np.testing.assert_array_equal(edge, expected)
    np.testing.assert_array_equal(number_operator(f, 0, UP) + number_operator(f, 0, DOWN),
                                  number_operator(f, 0))


def test_hopping_matrix_is_adjoint_pair():
    b = enumerate_boson_basis(3, 3)
    T = hopping_matrix(b, 0, 1)
    np.testing.assert_allclose(hopping_matrix(b, 1, 0), T.conj().T)


@settings(max_examples=30, deadline=None)
@given(N=st.integers(1, 5), n=st.integers(0, 6), cap=st.integers(1, 3))
def test_boson_basis_invariants(N, n, cap):
    if n > N * cap:
        return
    b = enumerate_boson_basis(N, n, cap)
    assert b.dim == brute_force_boson_count(N, n, cap)
    assert all(sum(c) == n and max(c) <= cap for c in b.configs)
    assert list(b.configs) == sorted(b.configs)
