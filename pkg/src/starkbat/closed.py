"""Unitary charging: work, average power and their closed-form references."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional, Union

import numpy as np
from scipy import optimize

from .fock import FockBasis, enumerate_boson_basis, enumerate_fermion_basis
from .hamiltonians import (HermitianOperator, HubbardParams, build_hamiltonian,
                           eigendecompose, normalize_spectrum)
from .states import DensityState, gibbs_state, ground_state, top_state

FREQ_TOL = 1e-9
DEFAULT_POINTS = 10_000
MAX_POINTS = 200_000


def evolve(rho0: DensityState, H_c: HermitianOperator, t: float) -> DensityState:
    """``exp(-i H_c t) rho0 exp(i H_c t)`` through the eigenbasis of ``H_c``."""
    if rho0.dim != H_c.dim:
        raise ValueError(f"state dim {rho0.dim} != Hamiltonian dim {H_c.dim}")
    if t == 0:
        return DensityState(rho0.matrix, rho0.basis)
    spec = eigendecompose(H_c)
    V = spec.eigenvectors
    U = (V * np.exp(-1j * spec.eigenvalues * t)) @ V.conj().T
    return DensityState(U @ rho0.matrix @ U.conj().T, rho0.basis)


def work(rho_t: DensityState, rho0: DensityState, H: HermitianOperator) -> float:
    """Energy deposited in the battery, ``Tr[H (rho_t - rho0)]``."""
    return H.expectation(rho_t.matrix - rho0.matrix)


class WorkFunction:
    """``W(t)`` as a finite Fourier sum over the charger's Bohr frequencies.

    ``W(t) = c0 + sum_w 2 Re[C_w exp(-i w t)]`` with ``w > 0``; evaluating
    it costs one term per distinct frequency rather than a matrix product.
    """

    def __init__(self, rho0: DensityState, H_battery: HermitianOperator,
                 H_charger: HermitianOperator, freq_tol: float = FREQ_TOL):
        spec = eigendecompose(H_charger)
        V = spec.eigenvectors
        lam = spec.eigenvalues
        R = V.conj().T @ rho0.matrix @ V
        H = V.conj().T @ H_battery.matrix @ V
        # <H>(t) = sum_kl H_lk R_kl exp(-i (lam_k - lam_l) t)
        coef = (H.T * R).ravel()
        omega = (lam[:, None] - lam[None, :]).ravel()
        keep = np.abs(coef) > 1e-15
        coef, omega = coef[keep], omega[keep]
        self.initial_energy = H_battery.expectation(rho0.matrix)
        self.energy_bound = eigendecompose(H_battery).E_max - self.initial_energy

        tol = freq_tol * max(1.0, float(np.max(np.abs(lam))) if lam.size else 1.0)
        pos = omega > tol
        zero = np.abs(omega) <= tol
        self.constant = float(np.real(coef[zero].sum())) - self.initial_energy
        w, c = omega[pos], coef[pos]
        order = np.argsort(w)
        w, c = w[order], c[order]
        freqs, amps = [], []
        start = 0
        for k in range(1, len(w) + 1):
            if k == len(w) or w[k] - w[k - 1] > tol:
                block = slice(start, k)
                freqs.append(float(np.mean(w[block])))
                amps.append(2 * c[block].sum())
                start = k
        amps = np.array(amps, dtype=complex)
        sig = np.abs(amps) > 1e-14
        self.frequencies = np.array(freqs)[sig]
        self.amplitudes = amps[sig]

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        phase = np.exp(-1j * np.multiply.outer(t, self.frequencies))
        return self.constant + np.real(phase @ self.amplitudes)

    def period(self, max_denominator: int = 1000, rtol: float = 1e-9) -> Optional[float]:
        """Common period of all frequencies, or ``None`` if they look incommensurate."""
        if self.frequencies.size == 0:
            return None
        base = self.frequencies[0]
        ratios = []
        for w in self.frequencies:
            frac = Fraction(w / base).limit_denominator(max_denominator)
            if abs(float(frac) * base - w) > rtol * w:
                return None
            ratios.append(frac)
        lcm_den = np.lcm.reduce([f.denominator for f in ratios])
        nums = [int(f * lcm_den) for f in ratios]
        unit = base / lcm_den * np.gcd.reduce(nums)
        return 2 * np.pi / unit


@dataclass(frozen=True)
class WorkSeries:
    times: np.ndarray
    work: np.ndarray

    @property
    def power(self) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(self.times > 0, self.work / self.times, 0.0)


InitialKind = str


@dataclass(frozen=True)
class ChargingScenario:
    """A battery Hamiltonian, its initial state and a quench to a charger.

    ``initial`` is ``"ground"``, ``"gibbs"`` (needs ``beta``) or ``"top"``.
    With ``normalize`` the work is measured against the battery Hamiltonian
    rescaled to spectrum ``[-1, 1]``.
    """

    statistics: str
    N: int
    battery: HubbardParams
    charger: HubbardParams
    n: Optional[int] = None
    n_up: Optional[int] = None
    n_down: Optional[int] = None
    cap: int = 2
    initial: InitialKind = "ground"
    beta: Optional[float] = None
    normalize: bool = True
    ordering: str = field(default="spin_major", compare=False)

    def __post_init__(self):
        if self.statistics not in ("boson", "fermion"):
            raise ValueError(f"unknown statistics {self.statistics!r}")
        if self.statistics == "boson" and self.n is None:
            raise ValueError("bosonic scenario needs n")
        if self.statistics == "fermion" and (self.n_up is None or self.n_down is None):
            raise ValueError("fermionic scenario needs n_up and n_down")
        if self.initial not in ("ground", "gibbs", "top"):
            raise ValueError(f"unknown initial state {self.initial!r}")
        if self.initial == "gibbs" and self.beta is None:
            raise ValueError("gibbs initial state needs beta")

    def with_(self, **changes) -> "ChargingScenario":
        return replace(self, **changes)

    @cached_property
    def basis(self) -> FockBasis:
        if self.statistics == "boson":
            return enumerate_boson_basis(self.N, self.n, self.cap)
        return enumerate_fermion_basis(self.N, self.n_up, self.n_down, self.ordering)

    @cached_property
    def battery_hamiltonian(self) -> HermitianOperator:
        return build_hamiltonian(self.basis, self.battery)

    @cached_property
    def reference_hamiltonian(self) -> HermitianOperator:
        """Battery Hamiltonian that work and ergotropy are measured against."""
        if self.normalize:
            return normalize_spectrum(self.battery_hamiltonian)
        return self.battery_hamiltonian

    @cached_property
    def charger_hamiltonian(self) -> HermitianOperator:
        return build_hamiltonian(self.basis, self.charger)

    @cached_property
    def initial_state(self) -> DensityState:
        H = self.battery_hamiltonian
        if self.initial == "ground":
            return ground_state(H)
        if self.initial == "top":
            return top_state(H)
        return gibbs_state(H, self.beta)

    @cached_property
    def work_function(self) -> WorkFunction:
        return WorkFunction(self.initial_state, self.reference_hamiltonian,
                            self.charger_hamiltonian)

    def work_series(self, times) -> WorkSeries:
        times = np.asarray(times, dtype=float)
        return WorkSeries(times, self.work_function(times))


def matched_fermion_filling(N: int) -> tuple[int, int]:
    """Fermion sector paired with ``n = N`` bosons: half filling, extra up spin for odd N."""
    return (N + 1) // 2, N // 2


def case1(statistics: str, N: int, *, U_c: float, r_c: float, J: float = 1.0,
          **sector) -> ChargingScenario:
    """Hopping-only battery charged by onsite and Stark terms."""
    return ChargingScenario(statistics, N, HubbardParams(J=J), HubbardParams(U=U_c, r=r_c),
                            **sector)


def case2(statistics: str, N: int, *, J_c: float, r_c: float, r: float = 1.0,
          **sector) -> ChargingScenario:
    """Stark-only battery charged by hopping and Stark terms."""
    return ChargingScenario(statistics, N, HubbardParams(r=r), HubbardParams(J=J_c, r=r_c),
                            **sector)


def default_horizon(W: WorkFunction) -> float:
    """One common period of ``W`` if it exists, else 50 over its slowest frequency."""
    if W.frequencies.size == 0:
        return 1.0
    period = W.period()
    if period is not None and period <= 50 / W.frequencies[0]:
        return period
    return 50 / W.frequencies[0]


def max_average_power(source: Union[ChargingScenario, WorkFunction, Callable],
                      t_max: Optional[float] = None, points: int = DEFAULT_POINTS,
                      rtol: float = 1e-8) -> tuple[float, float]:
    """Maximum of ``W(t)/t`` over ``0 < t <= t_max`` and its location.

    A uniform grid locates the best sample (earliest on ties); golden-section
    search then refines inside the neighbouring grid cells.
    """
    W = source.work_function if isinstance(source, ChargingScenario) else source
    if t_max is None:
        if not isinstance(W, WorkFunction):
            raise ValueError("t_max is required for a plain callable")
        t_max = default_horizon(W)
        # resolve the fastest oscillation with at least 20 samples per period
        if W.frequencies.size:
            need = int(np.ceil(20 * t_max * W.frequencies[-1] / (2 * np.pi)))
            points = min(max(points, need), MAX_POINTS)
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    t = np.linspace(t_max / points, t_max, points)
    P = np.asarray(W(t)) / t
    k = int(np.argmax(P))
    if P[k] <= 1e-14:
        return 0.0, float(t[0])
    lo = t[k - 1] if k > 0 else 0.5 * t[0]
    hi = t[k + 1] if k + 1 < points else t[k]

    def neg_power(s):
        return -float(W(np.array([s]))[0]) / s

    if lo < t[k] < hi:
        try:
            t_star = optimize.golden(neg_power, brack=(lo, t[k], hi), tol=rtol)
        except ValueError:  # flat bracket, grid point already optimal
            t_star = None
        if t_star is not None and lo <= t_star <= hi and -neg_power(t_star) >= P[k]:
            return -neg_power(t_star), float(t_star)
    return float(P[k]), float(t[k])


def delta_pmax(c1: ChargingScenario, c2: ChargingScenario, **kw) -> float:
    """``P_max(C1) - P_max(C2)``."""
    if c1.basis.configs != c2.basis.configs or c1.statistics != c2.statistics:
        raise ValueError("scenarios must share statistics and basis")
    return max_average_power(c1, **kw)[0] - max_average_power(c2, **kw)[0]


def delta_fb(boson: ChargingScenario, fermion: ChargingScenario, **kw) -> float:
    """``P_max(fermions) - P_max(bosons)``; negative means bosons charge faster."""
    if boson.statistics != "boson" or fermion.statistics != "fermion":
        raise ValueError("expected a bosonic and a fermionic scenario")
    return max_average_power(fermion, **kw)[0] - max_average_power(boson, **kw)[0]


ORACLE_CASES = ("prop1", "prop2_boson", "prop2_fermion", "prop2_stark_battery",
                "prop3", "eq8_single_particle")


def analytic_work_oracle(case: str, t, *, r_c: float = 0.0, U_c: float = 0.0,
                         J_c: float = 0.0, N: int = 2, J: float = 1.0):
    """Closed-form work curves for solvable battery/charger pairs.

    ``prop1``
        two sites, hopping battery, onsite + Stark charger: ``1 - cos(r t) cos(U t)``
    ``prop2_boson`` / ``prop2_fermion``
        two sites, onsite battery, hopping charger: ``2 sin^2(2 J t)`` and ``sin^2(2 J t)``
    ``prop2_stark_battery``
        two sites, Stark battery, hopping charger: ``2 sin^2(J t)``
    ``prop3``
        hopping battery, Stark charger, any size: ``1 - cos(r t)``
    ``eq8_single_particle``
        one particle, raw units: ``2 J cos(pi/(N+1)) (1 - cos(r t))``

    All but the last refer to the normalized battery.
    """
    t = np.asarray(t, dtype=float)
    if case == "prop1":
        return 1 - np.cos(r_c * t) * np.cos(U_c * t)
    if case == "prop2_boson":
        return 2 * np.sin(2 * J_c * t) ** 2
    if case == "prop2_fermion":
        return np.sin(2 * J_c * t) ** 2
    if case == "prop2_stark_battery":
        return 2 * np.sin(J_c * t) ** 2
    if case == "prop3":
        return 1 - np.cos(r_c * t)
    if case == "eq8_single_particle":
        return 2 * J * np.cos(np.pi / (N + 1)) * (1 - np.cos(r_c * t))
    raise ValueError(f"unknown oracle case {case!r}; expected one of {ORACLE_CASES}")


def fit_work_form(series: WorkSeries, r_c: float, U_c: float):
    """Least-squares fit of ``a + b cos(r t) + g cos(r t) cos(U t)``.

    Returns ``(a, b, g, rms_residual)``.
    """
    t = np.asarray(series.times, dtype=float)
    X = np.column_stack([np.ones_like(t), np.cos(r_c * t), np.cos(r_c * t) * np.cos(U_c * t)])
    coef, _, rank, _ = np.linalg.lstsq(X, series.work, rcond=None)
    if rank < 3:
        raise np.linalg.LinAlgError("design matrix is rank deficient for these frequencies")
    resid = series.work - X @ coef
    return float(coef[0]), float(coef[1]), float(coef[2]), float(np.sqrt(np.mean(resid ** 2)))
