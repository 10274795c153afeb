"""Occupation-number bases for open Hubbard chains.

Bosonic sectors hold a fixed particle number ``n`` with at most ``cap``
bosons per site.  Fermionic sectors hold fixed ``n_up`` and ``n_down``.
Sites are labelled ``0 .. N-1`` internally; Hamiltonian builders convert to
the physical labels ``1 .. N`` where it matters (the Stark tilt).

Fermionic signs follow the Jordan-Wigner rule against a fixed global mode
ordering.  The default ``"spin_major"`` ordering lists all up modes
(site 0..N-1) followed by all down modes; nearest-neighbour hops of one spin
species then never jump over an occupied mode, so every open-chain hopping
amplitude is real and negative.  ``"site_major"`` (up, down at each site in
turn) is available for comparison; both orderings give unitarily equivalent
Hamiltonians.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

BOSON = "boson"
FERMION = "fermion"
UP, DOWN = 0, 1
MODE_ORDERINGS = ("spin_major", "site_major")


class InfeasibleSectorError(ValueError):
    """Raised when no configuration satisfies the particle-number constraints."""


@dataclass(frozen=True)
class FockBasis:
    """Ordered, immutable list of occupation configurations.

    For bosons each configuration is a tuple of ``N`` per-site counts.  For
    fermions it is a pair ``(up, down)`` of length-``N`` bit tuples.
    """

    statistics: str
    N: int
    configs: tuple
    n: Optional[int] = None
    n_up: Optional[int] = None
    n_down: Optional[int] = None
    cap: Optional[int] = None
    ordering: str = "spin_major"
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {c: k for k, c in enumerate(self.configs)})
        if len(self.index) != len(self.configs):
            raise ValueError("duplicate configurations in basis")

    @property
    def dim(self) -> int:
        return len(self.configs)

    @property
    def is_boson(self) -> bool:
        return self.statistics == BOSON

    @property
    def n_particles(self) -> int:
        return self.n if self.is_boson else self.n_up + self.n_down

    def site_occupations(self) -> np.ndarray:
        """Array of shape (dim, N) with total particle count per site."""
        if self.is_boson:
            return np.array(self.configs, dtype=float).reshape(self.dim, self.N)
        up = np.array([c[0] for c in self.configs], dtype=float).reshape(self.dim, self.N)
        down = np.array([c[1] for c in self.configs], dtype=float).reshape(self.dim, self.N)
        return up + down

    def _check_site(self, i: int) -> None:
        if not 0 <= i < self.N:
            raise IndexError(f"site {i} out of range for N={self.N}")

    def mode(self, i: int, spin: int) -> int:
        """Global Jordan-Wigner position of fermionic mode (site ``i``, ``spin``)."""
        if self.ordering == "spin_major":
            return spin * self.N + i
        return 2 * i + spin


def enumerate_boson_basis(N: int, n: int, cap: int = 2) -> FockBasis:
    """All configurations of ``n`` bosons on ``N`` sites, at most ``cap`` per site.

    Configurations are returned in ascending lexicographic order, so for
    ``N=2, n=2`` the basis is ``(0, 2), (1, 1), (2, 0)``.
    """
    if N < 1 or n < 0 or cap < 1:
        raise ValueError("need N >= 1, n >= 0, cap >= 1")
    if n > N * cap:
        raise InfeasibleSectorError(f"{n} bosons do not fit on {N} sites with cap {cap}")

    configs = []

    def fill(prefix, remaining, sites_left):
        if sites_left == 0:
            if remaining == 0:
                configs.append(tuple(prefix))
            return
        lo = max(0, remaining - cap * (sites_left - 1))
        for k in range(lo, min(cap, remaining) + 1):
            fill(prefix + [k], remaining - k, sites_left - 1)

    fill([], n, N)
    return FockBasis(BOSON, N, tuple(configs), n=n, cap=cap)


def _bit_strings(N: int, k: int) -> list[tuple[int, ...]]:
    out = []
    for occ in itertools.combinations(range(N), k):
        bits = [0] * N
        for s in occ:
            bits[s] = 1
        out.append(tuple(bits))
    return sorted(out)


def enumerate_fermion_basis(N: int, n_up: int, n_down: int,
                            ordering: str = "spin_major") -> FockBasis:
    """All spinful configurations with ``n_up`` up and ``n_down`` down fermions."""
    if N < 1 or n_up < 0 or n_down < 0:
        raise ValueError("need N >= 1 and non-negative particle numbers")
    if n_up > N or n_down > N:
        raise InfeasibleSectorError(
            f"({n_up} up, {n_down} down) fermions violate Pauli exclusion on {N} sites")
    if ordering not in MODE_ORDERINGS:
        raise ValueError(f"unknown mode ordering {ordering!r}")
    configs = tuple(itertools.product(_bit_strings(N, n_up), _bit_strings(N, n_down)))
    return FockBasis(FERMION, N, configs, n_up=n_up, n_down=n_down, ordering=ordering)


def boson_hop_element(basis: FockBasis, i: int, j: int, config_index: int):
    """Apply ``b_i^dag b_j`` to one basis configuration.

    Returns ``(target_index, amplitude)`` or ``None`` when site ``j`` is empty
    or site ``i`` is already at the cap.
    """
    basis._check_site(i)
    basis._check_site(j)
    occ = list(basis.configs[config_index])
    if occ[j] == 0:
        return None
    if i == j:
        return config_index, float(occ[i])
    if occ[i] + 1 > basis.cap:
        return None
    amp = np.sqrt(occ[j]) * np.sqrt(occ[i] + 1)
    occ[j] -= 1
    occ[i] += 1
    return basis.index[tuple(occ)], float(amp)


def _mode_bits(basis: FockBasis, config) -> list[int]:
    up, down = config
    bits = [0] * (2 * basis.N)
    for i in range(basis.N):
        bits[basis.mode(i, UP)] = up[i]
        bits[basis.mode(i, DOWN)] = down[i]
    return bits


def fermion_hop_element(basis: FockBasis, i: int, j: int, spin: int, config_index: int):
    """Apply ``c_{i,spin}^dag c_{j,spin}`` to one basis configuration.

    Returns ``(target_index, sign)`` or ``None`` if the move is Pauli blocked.
    The sign is ``(-1)`` to the number of occupied modes strictly between the
    two modes in the global ordering.
    """
    basis._check_site(i)
    basis._check_site(j)
    config = basis.configs[config_index]
    occ = config[spin]
    if occ[j] == 0:
        return None
    if i == j:
        return config_index, 1
    if occ[i] == 1:
        return None
    bits = _mode_bits(basis, config)
    a, b = sorted((basis.mode(i, spin), basis.mode(j, spin)))
    sign = -1 if sum(bits[a + 1:b]) % 2 else 1
    new = list(occ)
    new[j], new[i] = 0, 1
    target = (tuple(new), config[1]) if spin == UP else (config[0], tuple(new))
    return basis.index[target], sign


def number_operator(basis: FockBasis, i: int, spin: Optional[int] = None) -> np.ndarray:
    """Diagonal number operator on site ``i`` (0-based).

    For fermions ``spin=None`` gives ``n_up + n_down``.
    """
    basis._check_site(i)
    if basis.is_boson:
        diag = [c[i] for c in basis.configs]
    elif spin is None:
        diag = [c[0][i] + c[1][i] for c in basis.configs]
    else:
        diag = [c[spin][i] for c in basis.configs]
    return np.diag(np.asarray(diag, dtype=complex))


def hopping_matrix(basis: FockBasis, i: int, j: int) -> np.ndarray:
    """Dense matrix of ``b_i^dag b_j`` (bosons) or ``sum_s c_is^dag c_js`` (fermions)."""
    out = np.zeros((basis.dim, basis.dim), dtype=complex)
    spins = (None,) if basis.is_boson else (UP, DOWN)
    for k in range(basis.dim):
        for s in spins:
            hit = (boson_hop_element(basis, i, j, k) if s is None
                   else fermion_hop_element(basis, i, j, s, k))
            if hit is not None:
                out[hit[0], k] += hit[1]
    return out


def fermion_ladder_matrices(N: int, ordering: str = "spin_major"):
    """Annihilation matrices ``c_(i,s)`` on the full ``4**N`` fermionic Fock space.

    Returns ``(modes, mats)`` where ``modes[k] == (i, s)`` and ``mats[k]`` is
    the dense matrix.  Intended for algebra checks on small chains.
    """
    bases = [enumerate_fermion_basis(N, u, d, ordering)
             for u in range(N + 1) for d in range(N + 1)]
    configs = [c for b in bases for c in b.configs]
    index = {c: k for k, c in enumerate(configs)}
    probe = bases[0]
    dim = len(configs)
    modes = [(i, s) for i in range(N) for s in (UP, DOWN)]
    mats = []
    for i, s in modes:
        c = np.zeros((dim, dim))
        pos = probe.mode(i, s)
        for k, cfg in enumerate(configs):
            if cfg[s][i] == 0:
                continue
            bits = _mode_bits(probe, cfg)
            sign = -1 if sum(bits[:pos]) % 2 else 1
            occ = list(cfg[s])
            occ[i] = 0
            new = (tuple(occ), cfg[1]) if s == UP else (cfg[0], tuple(occ))
            c[index[new], k] = sign
        mats.append(c)
    return modes, mats


def boson_ladder_matrices(N: int, cap: int = 2):
    """Annihilation matrices ``b_i`` on the cap-truncated space of all particle numbers.

    Returns ``(configs, mats)``.
    """
    configs = list(itertools.product(range(cap + 1), repeat=N))
    index = {c: k for k, c in enumerate(configs)}
    dim = len(configs)
    mats = []
    for i in range(N):
        b = np.zeros((dim, dim))
        for k, cfg in enumerate(configs):
            if cfg[i] == 0:
                continue
            new = list(cfg)
            new[i] -= 1
            b[index[tuple(new)], k] = np.sqrt(cfg[i])
        mats.append(b)
    return configs, mats
