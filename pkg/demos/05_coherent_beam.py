"""Propagating a coherent beam through the cavity.

A coherent state alpha entering port 1 exits every port still coherent,
with amplitude beta_k = |M| e^(i theta_k) alpha set by the first column of
the scattering matrix. The photocurrent at each port is Poissonian, so
its variance equals its mean. This script propagates a beam, checks
energy conservation, and relates the output energies to the response
fractions.
"""

import cmath

from ringcavity import CavityConfig, propagate_coherent, response_closed


def main():
    config = CavityConfig(3, 0.7, (0.4, 0.9, 1.6))
    alpha = 2.0 * cmath.exp(0.5j)
    out = propagate_coherent(config, alpha)

    print(f"input: alpha = {alpha:.4f}, |alpha|^2 = {abs(alpha) ** 2:.4f}")
    print()
    print(f"{'port':>4} {'|beta_k|^2':>11} {'theta_k':>9} {'<I_k>':>8} {'var I_k':>8}")
    for k, (beta, theta, mean, var) in enumerate(
        zip(out.betas, out.thetas, out.mean_currents, out.variances), start=1
    ):
        print(f"{k:4d} {abs(beta) ** 2:11.4f} {theta:9.4f} {mean:8.4f} {var:8.4f}")
    print()
    print(f"total output energy: {sum(out.mean_currents):.6f} "
          f"(conserved, mirrors are lossless)")

    f = response_closed(config).f
    print("output energies over |alpha|^2 reproduce the response fractions:")
    for k, (mean, fraction) in enumerate(zip(out.mean_currents, f), start=1):
        print(f"  port {k}: {mean / abs(alpha) ** 2:.6f} vs f_{k} = {fraction:.6f}")


if __name__ == "__main__":
    main()
