"""Bose- and Fermi-Hubbard chains with a Wannier-Stark tilt.

Energies are in units with hbar = k_B = 1.  The tilt uses physical site
labels ``1 .. N``, so for two bosons on two sites the diagonal reads
``(U - 4r, -3r, U - 2r)`` on ``(0,2), (1,1), (2,0)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .fock import FockBasis, hopping_matrix

HERMITIAN_TOL = 1e-12


@dataclass(frozen=True)
class HubbardParams:
    """Hopping ``J``, onsite ``U`` and Stark ``r`` strengths."""

    J: float = 0.0
    U: float = 0.0
    r: float = 0.0

    def __post_init__(self):
        if not all(np.isfinite([self.J, self.U, self.r])):
            raise ValueError(f"non-finite Hubbard parameters {self}")

    def scaled(self, s: float) -> "HubbardParams":
        return HubbardParams(s * self.J, s * self.U, s * self.r)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def E_min(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def E_max(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def width(self) -> float:
        return self.E_max - self.E_min


@dataclass(eq=False)
class HermitianOperator:
    """Dense Hermitian matrix on a :class:`FockBasis` with a cached spectrum."""

    matrix: np.ndarray
    basis: Optional[FockBasis] = None
    _spectrum: Optional[Spectrum] = field(default=None, repr=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"operator must be square, got shape {m.shape}")
        if self.basis is not None and m.shape[0] != self.basis.dim:
            raise ValueError("operator dimension does not match basis")
        if m.size and np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL * max(1.0, np.max(np.abs(m))):
            raise ValueError("operator is not Hermitian")
        m = 0.5 * (m + m.conj().T)
        m.setflags(write=False)
        self.matrix = m

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def spectrum(self) -> Spectrum:
        return eigendecompose(self)

    def __add__(self, other: "HermitianOperator") -> "HermitianOperator":
        return HermitianOperator(self.matrix + other.matrix, self.basis)

    def expectation(self, rho: np.ndarray) -> float:
        return float(np.real(np.einsum("ij,ji->", self.matrix, rho)))


def eigendecompose(H: HermitianOperator) -> Spectrum:
    """Ascending eigenvalues and orthonormal eigenvectors, cached on ``H``."""
    if H._spectrum is None:
        w, v = np.linalg.eigh(H.matrix)
        w.setflags(write=False)
        v.setflags(write=False)
        H._spectrum = Spectrum(w, v)
    return H._spectrum


def _stark_diagonal(basis: FockBasis) -> np.ndarray:
    labels = np.arange(1, basis.N + 1, dtype=float)
    return basis.site_occupations() @ labels


def _hopping(basis: FockBasis) -> np.ndarray:
    K = np.zeros((basis.dim, basis.dim), dtype=complex)
    for i in range(basis.N - 1):
        T = hopping_matrix(basis, i, i + 1)
        K += T + T.conj().T
    return K


def build_bose_hubbard(basis: FockBasis, params: HubbardParams) -> HermitianOperator:
    """Open-chain Bose-Hubbard Hamiltonian with a Stark tilt."""
    if not basis.is_boson:
        raise TypeError("build_bose_hubbard needs a bosonic basis")
    occ = basis.site_occupations()
    onsite = 0.5 * np.sum(occ * (occ - 1), axis=1)
    H = -params.J * _hopping(basis)
    H += np.diag(params.U * onsite - params.r * _stark_diagonal(basis))
    return HermitianOperator(H, basis)


def build_fermi_hubbard(basis: FockBasis, params: HubbardParams) -> HermitianOperator:
    """Open-chain spinful Fermi-Hubbard Hamiltonian with a Stark tilt."""
    if basis.is_boson:
        raise TypeError("build_fermi_hubbard needs a fermionic basis")
    up = np.array([c[0] for c in basis.configs], dtype=float)
    down = np.array([c[1] for c in basis.configs], dtype=float)
    doubles = np.sum(up * down, axis=1)
    H = -params.J * _hopping(basis)
    H += np.diag(params.U * doubles - params.r * _stark_diagonal(basis))
    return HermitianOperator(H, basis)


def build_hamiltonian(basis: FockBasis, params: HubbardParams) -> HermitianOperator:
    if basis.is_boson:
        return build_bose_hubbard(basis, params)
    return build_fermi_hubbard(basis, params)


def normalize_spectrum(H: HermitianOperator) -> HermitianOperator:
    """Affine rescaling ``(2H - (E_max + E_min)) / (E_max - E_min)``.

    The result has spectrum in ``[-1, 1]`` with both ends attained; the
    eigenvectors are shared with ``H``.
    """
    spec = eigendecompose(H)
    width = spec.width
    if width <= 1e-12 * max(1.0, abs(spec.E_max)):
        raise ValueError("cannot normalize a Hamiltonian with a flat spectrum")
    shift = spec.E_max + spec.E_min
    out = HermitianOperator((2 * H.matrix - shift * np.eye(H.dim)) / width, H.basis)
    w = np.clip((2 * spec.eigenvalues - shift) / width, -1.0, 1.0)
    w[0], w[-1] = -1.0, 1.0
    out._spectrum = Spectrum(w, spec.eigenvectors)
    return out
