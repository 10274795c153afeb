#!/usr/bin/env python3
"""Ergotropy generated by the baths alone.

Two thermal baths (T=1, eta=0.01) sit on the chain ends and nothing else
drives the battery.  Fermions end up in a non-passive steady state: the
ergotropy climbs from zero and saturates.  Bosons relax to a passive
Gibbs state, so at most a small transient appears.
"""
import numpy as np

from starkbat.closed import ChargingScenario
from starkbat.ergotropy import ergotropy
from starkbat.hamiltonians import HubbardParams as P
from starkbat.open_system import BathSpec, build_generator, integrate, steady_state

# ---- settings ----
N = 4
T_BATH = 1.0
ETA = 1e-2
TIMES = np.array([0, 100, 1000, 3000, 10000, 30000], dtype=float)
BATTERIES = {"J": P(J=1), "J,U": P(J=1, U=1), "J,r": P(J=1, r=1)}
# ------------------

baths = [BathSpec(1, 1 / T_BATH, ETA), BathSpec(N, 1 / T_BATH, ETA)]
for stat, sector in [("fermion", dict(n_up=2, n_down=2)), ("boson", dict(n=4))]:
    print(stat)
    for label, params in BATTERIES.items():
        sc = ChargingScenario(stat, N, params, P(), **sector)
        gen = build_generator(sc.battery_hamiltonian, baths)
        traj = integrate(gen, sc.initial_state, TIMES)
        E = [ergotropy(rho, sc.reference_hamiltonian).ergotropy for rho in traj]
        final = steady_state(gen, sc.initial_state, t_cap=1e6)
        E_ss = ergotropy(final.state, sc.reference_hamiltonian).ergotropy
        row = " ".join(f"{e:.4f}" for e in E)
        print(f"  {label:4s} E(t) = {row}   steady {E_ss:.4f}")
