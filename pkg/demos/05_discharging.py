#!/usr/bin/env python3
"""Leakage of a fully charged battery into the baths.

Start from the top eigenstate (ergotropy 2 in normalized units) and let
the edge baths act.  Interactions and a Stark tilt in the battery slow
the loss down.
"""
import numpy as np

from starkbat.closed import ChargingScenario
from starkbat.ergotropy import ergotropy
from starkbat.hamiltonians import HubbardParams as P
from starkbat.open_system import BathSpec, build_generator, integrate

# ---- settings ----
N = 4
TIMES = np.linspace(0, 3000, 301)
# ------------------

baths = [BathSpec(1, 1.0), BathSpec(N, 1.0)]
for stat, sector in [("boson", dict(n=4)), ("fermion", dict(n_up=2, n_down=2))]:
    for label, params in [("J", P(J=1)), ("J,U,r", P(1, 1, 1))]:
        sc = ChargingScenario(stat, N, params, P(), initial="top", **sector)
        gen = build_generator(sc.battery_hamiltonian, baths)
        E = np.array([ergotropy(r, sc.reference_hamiltonian).ergotropy
                      for r in integrate(gen, sc.initial_state, TIMES)])
        below = np.flatnonzero(E < 0.5 * E[0])
        half = f"{TIMES[below[0]]:g}" if below.size else f"> {TIMES[-1]:g}"
        print(f"{stat:8s} {label:6s} E(0)={E[0]:.3f}  E(1000)={E[100]:.3f}  "
              f"half-life {half}")
