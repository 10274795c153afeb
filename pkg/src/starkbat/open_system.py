"""Global GKSL dynamics with thermal baths on the chain edges.

Each bath couples to the particle number on one edge site.  The coupling
operator is split into eigenoperators of the battery Hamiltonian,

    exp(iHt) n exp(-iHt) = DECOMPOSITION_FACTOR * sum_w A(w) exp(-iwt),

so ``A(w)`` lowers the battery energy by ``w``.  Rates follow the KMS form
with an Ohmic spectral density ``eta * w * exp(-w / omega_c)``.

Internally states are propagated in the eigenbasis of the battery
Hamiltonian, where every ``A(w)`` is sparse; public functions take and return
Fock-basis :class:`DensityState` objects.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.linalg import expm_multiply

from .hamiltonians import HermitianOperator, eigendecompose
from .fock import number_operator
from .states import DensityState

log = logging.getLogger(__name__)

DECOMPOSITION_FACTOR = 2.0
OMEGA_TOL = 1e-8
DEFAULT_OMEGA_C = 10.0
EXACT_MAX_DIM = 40


class IntegrationError(RuntimeError):
    """The integrator would need an unreasonable number of substeps."""


@dataclass(frozen=True)
class BathSpec:
    """Thermal bath on a physical edge site (label 1 or N)."""

    site: int
    beta: float
    eta: float = 1e-2
    omega_c: float = DEFAULT_OMEGA_C

    def __post_init__(self):
        if not (self.eta > 0 and self.omega_c > 0 and self.beta > 0):
            raise ValueError(f"bath needs eta, omega_c, beta > 0: {self}")


def bath_rate(bath: BathSpec, omega):
    """KMS transition rate ``gamma(omega)``; ``eta / beta`` at ``omega = 0``."""
    w = np.asarray(omega, dtype=float)
    a = np.abs(w)
    safe = np.where(a > 0, a, 1.0)
    f = bath.eta * safe * np.exp(-safe / bath.omega_c)
    # f (1 + kappa) = f / (1 - exp(-beta w));   f kappa = f exp(-beta w) / (1 - exp(-beta w))
    emission = f / -np.expm1(-bath.beta * safe)
    rate = np.where(w > 0, emission, emission * np.exp(-bath.beta * safe))
    rate = np.where(a > 0, rate, bath.eta / bath.beta)
    return rate if rate.ndim else float(rate)


@dataclass
class EigenOperatorSet:
    """Eigenoperators of one coupling operator, stored in the battery eigenbasis.

    Group ``k`` has Bohr frequency ``omegas[k]`` and nonzero entries
    ``values[k]`` at ``(rows[k], cols[k])``.
    """

    omegas: np.ndarray
    rows: list
    cols: list
    values: list
    eigenvectors: np.ndarray

    def __len__(self) -> int:
        return len(self.omegas)

    def eigen_matrix(self, k: int) -> np.ndarray:
        d = self.eigenvectors.shape[0]
        A = np.zeros((d, d), dtype=complex)
        A[self.rows[k], self.cols[k]] = self.values[k]
        return A

    def operator(self, k: int) -> np.ndarray:
        """``A(omegas[k])`` in the Fock basis."""
        V = self.eigenvectors
        return V @ self.eigen_matrix(k) @ V.conj().T

    def index_of(self, omega: float, tol: float = 1e-9) -> int:
        k = int(np.argmin(np.abs(self.omegas - omega)))
        if abs(self.omegas[k] - omega) > tol:
            raise KeyError(omega)
        return k


def build_eigenoperators(H_battery: HermitianOperator, coupling: np.ndarray,
                         omega_tol: float = OMEGA_TOL) -> EigenOperatorSet:
    """Split ``coupling`` into ``A(w) = sum_{e_b - e_a = w} P_a C P_b / DECOMPOSITION_FACTOR``.

    Bohr frequencies closer than ``omega_tol`` times the spectral width are
    merged into one group.
    """
    spec = eigendecompose(H_battery)
    V, e = spec.eigenvectors, spec.eigenvalues
    C = V.conj().T @ np.asarray(coupling, dtype=complex) @ V
    d = len(e)
    a_idx, b_idx = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    a_idx, b_idx = a_idx.ravel(), b_idx.ravel()
    w = e[b_idx] - e[a_idx]
    order = np.argsort(w, kind="stable")
    a_idx, b_idx, w = a_idx[order], b_idx[order], w[order]
    tol = omega_tol * max(spec.width, 1e-300)
    breaks = np.flatnonzero(np.diff(w) > tol) + 1
    omegas, rows, cols, values = [], [], [], []
    for blk in np.split(np.arange(len(w)), breaks):
        vals = C[a_idx[blk], b_idx[blk]] / DECOMPOSITION_FACTOR
        nz = np.abs(vals) > 1e-14
        if not nz.any():
            continue
        omegas.append(float(np.mean(w[blk])))
        rows.append(a_idx[blk][nz])
        cols.append(b_idx[blk][nz])
        values.append(vals[nz])
    return EigenOperatorSet(np.array(omegas), rows, cols, values, V)


def coupling_operator(basis, site: int) -> np.ndarray:
    """Total particle number on physical site ``site`` (1-based)."""
    return number_operator(basis, site - 1)


def _vec(m: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(m).reshape(-1)


@dataclass(eq=False)
class LindbladGenerator:
    """Right-hand side ``-i[H_coh, rho] + sum_i sum_w gamma_i(w) D[A_i(w)] rho``."""

    H_battery: HermitianOperator
    H_coherent: Optional[HermitianOperator]
    baths: tuple
    eigenops: tuple
    rates: tuple
    liouvillian: sp.csr_matrix = field(repr=False)

    @property
    def dim(self) -> int:
        return self.H_battery.dim

    @property
    def eigenvectors(self) -> np.ndarray:
        return eigendecompose(self.H_battery).eigenvectors

    def to_eigen(self, rho: np.ndarray) -> np.ndarray:
        V = self.eigenvectors
        return V.conj().T @ rho @ V

    def from_eigen(self, rho: np.ndarray) -> np.ndarray:
        V = self.eigenvectors
        return V @ rho @ V.conj().T

    def __call__(self, rho) -> np.ndarray:
        """Fast RHS through the vectorized Liouvillian (Fock basis in and out)."""
        m = np.asarray(getattr(rho, "matrix", rho), dtype=complex)
        out = (self.liouvillian @ _vec(self.to_eigen(m))).reshape(self.dim, self.dim)
        return self.from_eigen(out)

    def apply(self, rho) -> np.ndarray:
        """RHS evaluated term by term with dense Fock-basis eigenoperators."""
        m = np.asarray(getattr(rho, "matrix", rho), dtype=complex)
        out = np.zeros_like(m)
        if self.H_coherent is not None:
            H = self.H_coherent.matrix
            out += -1j * (H @ m - m @ H)
        for ops, gam in zip(self.eigenops, self.rates):
            for k in range(len(ops)):
                A = ops.operator(k)
                AdA = A.conj().T @ A
                out += gam[k] * (A @ m @ A.conj().T - 0.5 * (AdA @ m + m @ AdA))
        return out

    def min_rate(self) -> float:
        rates = np.concatenate([np.asarray(g) for g in self.rates]) if self.rates else np.array([])
        rates = rates[rates > 0]
        return float(rates.min()) if rates.size else 0.0

    def norm_bound(self) -> float:
        """Upper bound on the spectral radius of the Liouvillian (max abs row sum)."""
        if self.liouvillian.nnz == 0:
            return 0.0
        return float(np.max(np.asarray(abs(self.liouvillian).sum(axis=1))))


def build_generator(H_battery: HermitianOperator, baths: Sequence[BathSpec],
                    H_charger: Optional[HermitianOperator] = None,
                    eigenops: Optional[Sequence[EigenOperatorSet]] = None,
                    include_battery_in_coherent: bool = False,
                    omega_tol: float = OMEGA_TOL) -> LindbladGenerator:
    """Assemble the generator for a battery with edge baths and an optional charger.

    The coherent part is ``H_charger`` alone unless
    ``include_battery_in_coherent`` adds the battery Hamiltonian.
    """
    basis = H_battery.basis
    d = H_battery.dim
    if H_charger is not None and H_charger.dim != d:
        raise ValueError("charger and battery act on different spaces")
    if eigenops is None:
        if basis is None:
            raise ValueError("need a basis or explicit eigenoperators")
        for b in baths:
            if b.site not in (1, basis.N):
                raise ValueError(f"bath site {b.site} is not an edge of an N={basis.N} chain")
        eigenops = [build_eigenoperators(H_battery, coupling_operator(basis, b.site), omega_tol)
                    for b in baths]
    if len(eigenops) != len(baths):
        raise ValueError("one eigenoperator set per bath is required")

    H_coh = None
    if H_charger is not None:
        H_coh = H_charger
    if include_battery_in_coherent:
        H_coh = H_battery if H_coh is None else H_coh + H_battery

    V = eigendecompose(H_battery).eigenvectors
    I = sp.identity(d, format="csr", dtype=complex)
    K = np.zeros((d, d), dtype=complex)
    jr, jc, jv = [], [], []
    rates = []
    for bath, ops in zip(baths, eigenops):
        gam = np.atleast_1d(bath_rate(bath, ops.omegas))
        rates.append(gam)
        for k in range(len(ops)):
            r, c, v = ops.rows[k], ops.cols[k], ops.values[k]
            A = ops.eigen_matrix(k)
            K += gam[k] * (A.conj().T @ A)
            # (A rho A^dag)_{ac} = sum A_ab conj(A_cd) rho_bd
            jr.append(np.add.outer(r * d, r).ravel())
            jc.append(np.add.outer(c * d, c).ravel())
            jv.append(gam[k] * np.multiply.outer(v, v.conj()).ravel())
    Heff = -0.5j * K
    if H_coh is not None:
        Heff = Heff + V.conj().T @ H_coh.matrix @ V
    Heff_sp = sp.csr_matrix(np.where(np.abs(Heff) > 1e-15, Heff, 0))
    L = -1j * sp.kron(Heff_sp, I) + 1j * sp.kron(I, Heff_sp.conj())
    if jr:
        jump = sp.coo_matrix((np.concatenate(jv), (np.concatenate(jr), np.concatenate(jc))),
                             shape=(d * d, d * d))
        L = L + jump
    return LindbladGenerator(H_battery, H_coh, tuple(baths), tuple(eigenops), tuple(rates),
                             sp.csr_matrix(L))


def _rk4(L: sp.csr_matrix, y: np.ndarray, dt: float, steps: int) -> np.ndarray:
    for _ in range(steps):
        k1 = L @ y
        k2 = L @ (y + 0.5 * dt * k1)
        k3 = L @ (y + 0.5 * dt * k2)
        k4 = L @ (y + dt * k3)
        y = y + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return y


def _hermitize(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def integrate_eigen(gen: LindbladGenerator, rho0_eig: np.ndarray, t_grid,
                    safety: float = 0.05, max_steps: int = 5_000_000,
                    method: str = "auto") -> np.ndarray:
    """Propagate in the battery eigenbasis; returns an array of shape (len(t), d, d).

    ``method="rk4"`` uses classical RK4 with substep ``safety / ||L||``; the
    global error scales as ``safety**4`` (about 1e-9 per unit time at 0.05).
    ``method="expm"`` (the default ``"auto"``) applies the exact propagator
    ``exp(L dt)``: a cached dense matrix for recurring steps when
    ``d <= EXACT_MAX_DIM``, otherwise ``scipy.sparse.linalg.expm_multiply``.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if np.any(np.diff(t_grid) < 0):
        raise ValueError("time grid must be ascending")
    if method in ("auto", "expm"):
        return _integrate_expm(gen, rho0_eig, t_grid)
    if method != "rk4":
        raise ValueError(f"unknown method {method!r}")
    d = gen.dim
    norm = gen.norm_bound()
    dt_max = safety / norm if norm > 0 else np.inf
    spans = np.diff(t_grid, prepend=t_grid[0] if t_grid.size else 0.0)
    nsub = np.where(spans > 0, np.ceil(spans / dt_max), 0).astype(np.int64) if np.isfinite(dt_max) \
        else (spans > 0).astype(np.int64)
    total = int(nsub.sum())
    if total > max_steps:
        raise IntegrationError(
            f"{total} RK4 substeps needed (dt={dt_max:.3g}, ||L||={norm:.3g}, "
            f"t_end={t_grid[-1]:.3g}); exceeds max_steps={max_steps}")
    out = np.empty((len(t_grid), d, d), dtype=complex)
    y = _vec(np.asarray(rho0_eig, dtype=complex)).copy()
    for k, (span, n) in enumerate(zip(spans, nsub)):
        if n > 0:
            y = _rk4(gen.liouvillian, y, span / n, int(n))
        m = _hermitize(y.reshape(d, d))
        y = _vec(m).copy()
        out[k] = m
    return out


def _integrate_expm(gen: LindbladGenerator, rho0_eig: np.ndarray, t_grid) -> np.ndarray:
    d = gen.dim
    L = gen.liouvillian
    spans = np.diff(t_grid, prepend=t_grid[0] if t_grid.size else 0.0)
    keys = np.round(spans, 12)
    uniq, counts = np.unique(keys[spans > 0], return_counts=True)
    # dense propagators only pay off for small d and spans that recur
    dense = {}
    if d <= EXACT_MAX_DIM:
        Ld = L.toarray()
        dense = {k: scipy.linalg.expm(Ld * k) for k, c in zip(uniq, counts) if c >= 3}
    out = np.empty((len(t_grid), d, d), dtype=complex)
    y = _vec(np.asarray(rho0_eig, dtype=complex)).copy()
    for k, (span, key) in enumerate(zip(spans, keys)):
        if span > 0:
            y = dense[key] @ y if key in dense else expm_multiply(L * span, y)
        m = _hermitize(y.reshape(d, d))
        y = _vec(m).copy()
        out[k] = m
    return out


def integrate(gen: LindbladGenerator, rho0: DensityState, t_grid, **kw) -> list[DensityState]:
    """States ``rho(t)`` on ``t_grid`` (ascending, starting at ``rho0``'s time)."""
    traj = integrate_eigen(gen, gen.to_eigen(rho0.matrix), t_grid, **kw)
    return [DensityState(gen.from_eigen(m), rho0.basis) for m in traj]


def trace_norm(m: np.ndarray) -> float:
    return float(np.sum(np.abs(np.linalg.eigvalsh(_hermitize(m)))))


@dataclass(frozen=True)
class SteadyStateResult:
    state: DensityState
    time: float
    converged: bool
    residual: float


def steady_state(gen: LindbladGenerator, rho0: DensityState, tol: float = 1e-9,
                 t_cap: float = 1e5, method: str = "auto", **kw) -> SteadyStateResult:
    """Integrate until successive states one relaxation time apart agree to ``tol``.

    The check interval is the inverse of the slowest nonzero rate, capped at
    ``t_cap / 10``.
    Non-convergence within ``t_cap`` is reported through ``converged=False``.
    """
    if gen.liouvillian.nnz == 0:
        return SteadyStateResult(rho0, 0.0, True, 0.0)
    rate = gen.min_rate()
    chunk = min(1.0 / rate, t_cap / 10) if rate > 0 else t_cap / 100
    d = gen.dim
    if method in ("auto", "expm") and d <= EXACT_MAX_DIM:
        prop = scipy.linalg.expm(gen.liouvillian.toarray() * chunk)

        def advance(m, step):
            if step == chunk:
                return _hermitize((prop @ _vec(m)).reshape(d, d))
            return integrate_eigen(gen, m, [0.0, step])[-1]
    else:
        def advance(m, step):
            return integrate_eigen(gen, m, [0.0, step], method=method, **kw)[-1]

    rho = gen.to_eigen(rho0.matrix)
    t = 0.0
    converged = False
    while t < t_cap:
        step = min(chunk, t_cap - t)
        new = advance(rho, step)
        t += step
        change = trace_norm(new - rho)
        rho = new
        if change < tol:
            converged = True
            break
    residual = float(np.max(np.abs(gen.liouvillian @ _vec(rho))))
    if converged and residual > 10 * tol:
        log.warning("steady state residual %.3g exceeds 10*tol", residual)
        converged = False
    if not converged:
        log.warning("no steady state within t_cap=%g (last change above tol)", t_cap)
    return SteadyStateResult(DensityState(gen.from_eigen(rho), rho0.basis), t, converged,
                             residual)


def asymptotic_state(gen: LindbladGenerator, rho0: DensityState, zero_tol: float = 1e-10,
                     max_dim: int = 40) -> DensityState:
    """Long-time limit from the spectral projector onto the Liouvillian kernel.

    Dense eigendecomposition of the ``d^2 x d^2`` Liouvillian, so only for
    ``d <= max_dim``.  With several conserved sectors the kernel is
    degenerate and the projection keeps the sector weights of ``rho0``.
    """
    d = gen.dim
    if d > max_dim:
        raise ValueError(f"dimension {d} too large for the dense Liouvillian route")
    L = gen.liouvillian.toarray()
    w, vl, vr = scipy.linalg.eig(L, left=True, right=True)
    scale = max(1.0, float(np.max(np.abs(w))))
    zero = np.abs(w) < zero_tol * scale * d
    if not zero.any():
        raise RuntimeError("Liouvillian has no zero eigenvalue")
    R, Lh = vr[:, zero], vl[:, zero].conj().T
    y = R @ np.linalg.solve(Lh @ R, Lh @ _vec(gen.to_eigen(rho0.matrix)))
    m = _hermitize(y.reshape(d, d))
    return DensityState(gen.from_eigen(m / np.trace(m).real), rho0.basis)
