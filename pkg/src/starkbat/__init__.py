"""Hubbard-chain quantum batteries with Wannier-Stark fields and edge baths."""
from .closed import (ChargingScenario, WorkFunction, case1, case2, delta_fb, delta_pmax,
                     max_average_power)
from .ergotropy import ergotropy, passive_energy
from .fock import enumerate_boson_basis, enumerate_fermion_basis
from .hamiltonians import HermitianOperator, HubbardParams, build_hamiltonian, normalize_spectrum
from .open_system import BathSpec, build_generator, integrate, steady_state
from .states import DensityState, gibbs_state, ground_state, top_state

__version__ = "0.1.0"

__all__ = [
    "BathSpec", "ChargingScenario", "DensityState", "HermitianOperator", "HubbardParams",
    "WorkFunction", "build_generator", "build_hamiltonian", "case1", "case2", "delta_fb",
    "delta_pmax", "enumerate_boson_basis", "enumerate_fermion_basis", "ergotropy",
    "gibbs_state", "ground_state", "integrate", "max_average_power", "normalize_spectrum",
    "passive_energy", "steady_state", "top_state",
]
