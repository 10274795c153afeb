#!/usr/bin/env python3
"""Maximum average power against the charger's Stark field.

Four bosons on four sites, battery J=1, U=3, charger U^c=1 plus a Stark
tilt r^c.  A weak tilt first lowers P_max; past a turning point the
power grows roughly linearly in r^c.
"""
import numpy as np

from starkbat.closed import ChargingScenario, max_average_power
from starkbat.hamiltonians import HubbardParams

# ---- settings ----
BATTERY = HubbardParams(J=1.0, U=3.0)
U_C = 1.0
RATIOS = np.linspace(0, 2, 11)
# ------------------

powers = []
for x in RATIOS:
    sc = ChargingScenario("boson", 4, BATTERY, HubbardParams(U=U_C, r=x * U_C), n=4)
    powers.append(max_average_power(sc)[0])

k = int(np.argmin(powers))
for x, p in zip(RATIOS, powers):
    mark = "  <- minimum" if p == powers[k] else ""
    print(f"r^c/U^c = {x:4.2f}   P_max = {p:.4f}{mark}")
