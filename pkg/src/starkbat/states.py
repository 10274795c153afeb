"""Initial battery states: ground-state projectors and Gibbs states."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fock import FockBasis
from .hamiltonians import HermitianOperator, eigendecompose

DEGENERACY_TOL = 1e-9
TRACE_TOL = 1e-10


@dataclass(eq=False)
class DensityState:
    """Density matrix on a Fock basis."""

    matrix: np.ndarray
    basis: Optional[FockBasis] = None

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got {m.shape}")
        m.setflags(write=False)
        self.matrix = m

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def purity(self) -> float:
        return float(np.real(np.vdot(self.matrix, self.matrix)))

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    def validate(self, tol: float = TRACE_TOL) -> None:
        """Raise ``ValueError`` unless Hermitian, unit trace and positive semidefinite."""
        m = self.matrix
        if np.max(np.abs(m - m.conj().T)) > tol:
            raise ValueError("density matrix is not Hermitian")
        if abs(self.trace - 1) > tol:
            raise ValueError(f"density matrix has trace {self.trace}")
        if np.linalg.eigvalsh(m)[0] < -tol:
            raise ValueError("density matrix has negative eigenvalues")

    @classmethod
    def pure(cls, psi: np.ndarray, basis: Optional[FockBasis] = None) -> "DensityState":
        psi = np.asarray(psi, dtype=complex)
        psi = psi / np.linalg.norm(psi)
        return cls(np.outer(psi, psi.conj()), basis)


def ground_state(H: HermitianOperator, tol_deg: float = DEGENERACY_TOL) -> DensityState:
    """Projector onto the ground level, maximally mixed if that level is degenerate.

    Levels within ``tol_deg`` times the spectral width of the minimum count
    as degenerate.
    """
    spec = eigendecompose(H)
    scale = max(spec.width, 1e-300)
    k = int(np.sum(spec.eigenvalues - spec.E_min <= tol_deg * scale))
    V = spec.eigenvectors[:, :k]
    return DensityState(V @ V.conj().T / k, H.basis)


def top_state(H: HermitianOperator, tol_deg: float = DEGENERACY_TOL) -> DensityState:
    """Projector onto the highest level (maximally charged battery)."""
    spec = eigendecompose(H)
    scale = max(spec.width, 1e-300)
    k = int(np.sum(spec.E_max - spec.eigenvalues <= tol_deg * scale))
    V = spec.eigenvectors[:, -k:]
    return DensityState(V @ V.conj().T / k, H.basis)


def gibbs_state(H: HermitianOperator, beta: float) -> DensityState:
    """Canonical state ``exp(-beta H) / Z``."""
    if not np.isfinite(beta) or beta < 0:
        raise ValueError(f"inverse temperature must be finite and non-negative, got {beta}")
    spec = eigendecompose(H)
    # shift by the ground energy so the largest exponent is zero
    p = np.exp(-beta * (spec.eigenvalues - spec.E_min))
    p /= p.sum()
    V = spec.eigenvectors
    return DensityState((V * p) @ V.conj().T, H.basis)
