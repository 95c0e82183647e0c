"""Propagation of a single coherent beam through the cavity.

Because the cavity map is linear, a coherent input on port 1 produces a
coherent output on every port: beta_k is the first matrix column read in
response-port order (see :func:`ringcavity.response.ring_port_order`)
times alpha, so |beta_k|^2 = |alpha|^2 f_k and theta_k = arg beta_k -
arg alpha.  Direct detection then gives Poissonian photocurrents: the
variance of each output photon number equals its mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cavity import CavityConfig, closed_form_matrix
from .response import ring_port_order


@dataclass(frozen=True)
class CoherentOutput:
    """Coherent output amplitudes and photocurrent statistics.

    ``betas[k-1]`` is the output amplitude on port k, ``thetas[k-1]`` its
    phase relative to the input (in (-pi, pi]), ``mean_currents[k-1]``
    the mean detected photon number |beta_k|^2 and ``variances`` its
    shot-noise variance (equal to the mean for coherent light).
    """

    alpha_in: complex
    betas: tuple[complex, ...]
    thetas: tuple[float, ...]
    mean_currents: tuple[float, ...]
    variances: tuple[float, ...]


def propagate_coherent(config: CavityConfig, alpha: complex) -> CoherentOutput:
    """Send a coherent amplitude ``alpha`` into port 1.

    |beta_k|^2 = |alpha|^2 f_k, so the total output energy equals the
    input energy.  The photocurrent variances
    are set equal to the means (Poisson statistics of coherent light);
    this identity is what turns the general photocurrent sensitivity
    into the sqrt(f_k)/|d f_k/d phi| form used in :mod:`.sensitivity`.

    Raises
    ------
    SingularCavityError
        For a resonant cavity with unit reflectivity.
    """
    order = ring_port_order(config.n)
    column = closed_form_matrix(config).entries[order, 0]
    betas = column * complex(alpha)
    means = np.abs(betas) ** 2
    return CoherentOutput(
        alpha_in=complex(alpha),
        betas=tuple(complex(b) for b in betas),
        thetas=tuple(math.atan2(c.imag, c.real) for c in column),
        mean_currents=tuple(float(m) for m in means),
        variances=tuple(float(m) for m in means),
    )
