"""Passive-state energy and ergotropy."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hamiltonians import HermitianOperator, eigendecompose

CLIP_TOL = 1e-10


@dataclass(frozen=True)
class ErgotropyResult:
    ergotropy: float
    passive_energy: float
    state_energy: float


def _as_matrix(rho) -> np.ndarray:
    return np.asarray(getattr(rho, "matrix", rho), dtype=complex)


def passive_energy(rho, H: HermitianOperator) -> float:
    """Energy of the passive state: state populations sorted down, energies sorted up."""
    m = _as_matrix(rho)
    if m.shape != H.matrix.shape:
        raise ValueError("state and Hamiltonian live on different spaces")
    if np.max(np.abs(m - m.conj().T)) > 1e-8 or abs(np.trace(m).real - 1) > 1e-8:
        raise ValueError("input is not a density matrix")
    p = np.sort(np.linalg.eigvalsh(0.5 * (m + m.conj().T)))[::-1]
    return float(np.dot(p, eigendecompose(H).eigenvalues))


def ergotropy(rho, H: HermitianOperator) -> ErgotropyResult:
    """Maximum work extractable from ``rho`` by a unitary, with ``H`` as reference."""
    energy = H.expectation(_as_matrix(rho))
    passive = passive_energy(rho, H)
    value = energy - passive
    if -CLIP_TOL < value < 0:
        value = 0.0
    return ErgotropyResult(value, passive, energy)
