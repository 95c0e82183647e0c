"""Energy response of the cavity ports and its resonance structure.

Feeding a beam into port 1, the fraction of the input energy leaving each
port depends only on the mirror reflectivity rho and the total round-trip
phase phi. This script evaluates the response from the closed form and
from the scattering matrix, checks the sum rule, and walks through the
resonance: phi = 0 for an even number of ports, phi = pi for an odd one,
where the back-reflection f_1 dips and the high-reflectivity limit splits
the remaining energy equally among the other ports.
"""

import math

import numpy as np

from ringcavity import (
    CavityConfig,
    high_reflectivity_limit,
    resonance_phase,
    response_at_resonance,
    response_closed,
    response_from_matrix,
    response_fractions,
)


def main():
    config = CavityConfig.uniform(3, 0.5, total_phase=math.pi / 3)
    closed = response_closed(config)
    via_matrix = response_from_matrix(config)
    print(f"n = 3, rho = 0.5, phi = pi/3")
    print(f"closed form:  f = {tuple(round(x, 5) for x in closed.f)}")
    print(f"from matrix:  f = {tuple(round(x, 5) for x in via_matrix.f)}")
    print(f"sum rule: sum(f) - 1 = {sum(closed.f) - 1.0:.2e}")
    print()

    # Sweep the round-trip phase and watch the back-reflection dip at
    # resonance while the far port picks up the energy.
    print("n = 4, rho = 0.9 response across one free spectral range:")
    print(f"{'phi':>8} {'f1':>8} {'f2':>8} {'f3':>8} {'f4':>8}")
    for phi in np.linspace(0.0, 2 * math.pi, 9):
        f = response_fractions(4, 0.9, float(phi))
        print(f"{phi:8.4f} " + " ".join(f"{x:8.4f}" for x in f))
    print(f"resonance phase for n = 4: {resonance_phase(4)}")
    print()

    # At resonance with nearly perfect mirrors the split becomes universal:
    # f_1 -> (1 - 2/n)^2 and every other port carries 4/n^2.
    for n in (2, 3, 4, 6):
        got = response_at_resonance(n, 1.0 - 1e-8).f
        limit = high_reflectivity_limit(n).f
        print(f"n = {n}: resonant f at rho ~ 1 = {tuple(round(x, 5) for x in got)}")
        print(f"       analytic limit        = {tuple(round(x, 5) for x in limit)}")


if __name__ == "__main__":
    main()
