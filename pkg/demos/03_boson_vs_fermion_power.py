#!/usr/bin/env python3
"""Which statistics charges faster?  Delta = P_max(fermions) - P_max(bosons).

N=4 sites, bosons n=4 against fermions n_up=n_down=2, both starting from
a thermal state of the battery (J=1, U varied).  Without a Stark field
in the charger fermions win at weak U; with r^c = U^c bosons take over
once U is large enough, and at high temperature they win everywhere.
"""
import numpy as np

from starkbat.closed import ChargingScenario, delta_fb
from starkbat.hamiltonians import HubbardParams

# ---- settings ----
U_VALUES = np.linspace(0, 6, 7)
BETAS = (100.0, 1.0)
RATIO = 1.0  # r^c / U^c
# ------------------


def delta(U, beta, ratio):
    battery = HubbardParams(J=1.0, U=U)
    charger = HubbardParams(U=1.0, r=ratio)
    b = ChargingScenario("boson", 4, battery, charger, n=4, initial="gibbs", beta=beta)
    f = ChargingScenario("fermion", 4, battery, charger, n_up=2, n_down=2,
                         initial="gibbs", beta=beta)
    return delta_fb(b, f)


print("U/J   " + "".join(f"beta={b:<8g}" for b in BETAS))
for U in U_VALUES:
    print(f"{U:4.1f}  " + "".join(f"{delta(U, b, RATIO): .4f}    " for b in BETAS))
