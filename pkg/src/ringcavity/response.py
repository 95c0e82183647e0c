"""Cavity response: energy distribution over the output ports.

With a unit excitation on port 1, f_k(rho, phi) is the fraction of the
input energy leaving through port k.  Remarkably the response depends on
the internal phases only through their sum phi.  Closed-form expressions
are provided alongside a matrix-based oracle, together with the
resonance and high-reflectivity limits and the resonance half-width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .cavity import SINGULARITY_EPS, CavityConfig, cascade_matrix
from .errors import ConvergenceError, InvalidConfigError, SingularCavityError


def resonance_phase(n: int) -> float:
    """Total phase minimizing the port-1 response: 0 for even n, pi for odd."""
    return 0.0 if n % 2 == 0 else math.pi


def _resonance_quadratic(base, phi, n: int):
    """(1 - base)^2 + 4 base sin^2(phi/2) [n even] or cos^2(phi/2) [n odd].

    Cancellation-free rewriting of 1 + base^2 + 2 (-1)^(1+n) base cos(phi);
    all terms are nonnegative, so the value stays accurate to machine
    precision even deep in the high-reflectivity regime.
    """
    half = np.sin(phi / 2.0) if n % 2 == 0 else np.cos(phi / 2.0)
    return (1.0 - base) ** 2 + 4.0 * base * half**2


def squared_denominator(n: int, rho, phi):
    """|A_n|^2 = 1 + rho^n + 2 (-1)^(1+n) rho^(n/2) cos(phi), broadcast over inputs."""
    rho = np.asarray(rho, dtype=float)
    return _resonance_quadratic(rho ** (n / 2), np.asarray(phi, dtype=float), n)


def response_fractions(n: int, rho, phi) -> np.ndarray:
    """The n response fractions f_1 .. f_n, vectorized over rho and phi.

    f_1 = rho [1 + rho^(n-2) + 2 (-1)^(1+n) rho^(n/2-1) cos(phi)] / |A_n|^2
    f_k = (1 - rho)^2 rho^(n-k) / |A_n|^2            for 2 <= k <= n

    Returns an array with shape broadcast(rho, phi).shape + (n,).
    """
    rho = np.asarray(rho, dtype=float)
    phi = np.asarray(phi, dtype=float)
    denom = squared_denominator(n, rho, phi)
    shape = np.broadcast_shapes(rho.shape, phi.shape)
    f = np.empty(shape + (n,))
    f[..., 0] = rho * _resonance_quadratic(rho ** (n / 2 - 1), phi, n) / denom
    for k in range(2, n + 1):
        f[..., k - 1] = (1.0 - rho) ** 2 * rho ** (n - k) / denom
    return f


@dataclass(frozen=True)
class ResponseProfile:
    """Response fractions of an n-port cavity at one operating point.

    ``f[k-1]`` is the fraction of the port-1 input energy leaving port k;
    the fractions sum to one.  ``a_squared`` is the squared magnitude of
    the resonance denominator |A_n|^2.
    """

    n: int
    rho: float
    total_phase: float
    f: tuple[float, ...]
    a_squared: float


def response_closed(config: CavityConfig) -> ResponseProfile:
    """Response profile from the closed-form fractions.

    Raises
    ------
    SingularCavityError
        If |A_n|^2 <= SINGULARITY_EPS^2.
    """
    phi = config.total_phase()
    denom = float(squared_denominator(config.n, config.rho, phi))
    if denom <= SINGULARITY_EPS**2:
        raise SingularCavityError("resonant cavity with unit reflectivity")
    f = response_fractions(config.n, config.rho, phi)
    return ResponseProfile(
        n=config.n,
        rho=config.rho,
        total_phase=phi,
        f=tuple(float(x) for x in f),
        a_squared=denom,
    )


def ring_port_order(n: int) -> list[int]:
    """0-based matrix rows in response-port order.

    The closed-form response indexes the outputs by upstream distance
    from the input coupler: response port n is the first coupler the
    circulating beam reaches (matrix row 2), response port 2 the last.
    This permutation, [1, n, n-1, ..., 2] in 1-based labels, reconciles
    the matrix row convention with the response fractions so that
    f_k = (1 - rho)^2 rho^(n-k) / |A_n|^2 holds as written.
    """
    return [0] + list(range(n - 1, 0, -1))


def response_from_matrix(config: CavityConfig) -> ResponseProfile:
    """Response profile read off the beam-splitter-cascade matrix.

    Independent oracle for :func:`response_closed`: only port 1 is
    excited, and the squared magnitudes of the first matrix column are
    collected in response-port order (:func:`ring_port_order`).
    """
    matrix = cascade_matrix(config)
    f = np.abs(matrix.entries[ring_port_order(config.n), 0]) ** 2
    return ResponseProfile(
        n=config.n,
        rho=config.rho,
        total_phase=config.total_phase(),
        f=tuple(float(x) for x in f),
        a_squared=float(squared_denominator(config.n, config.rho, config.total_phase())),
    )


def response_at_resonance(n: int, rho: float) -> ResponseProfile:
    """Response profile at the resonant total phase (0 even n, pi odd n).

    f_1 = rho [(1 - rho^(n/2-1)) / (1 - rho^(n/2))]^2
    f_k = rho^(n-k) [(1 - rho) / (1 - rho^(n/2))]^2    for 2 <= k <= n

    Raises
    ------
    InvalidConfigError
        For rho = 1 (the expressions become 0/0) or rho outside [0, 1).
    """
    if n < 2:
        raise InvalidConfigError(f"port count must be >= 2, got {n}")
    if not 0.0 <= rho < 1.0:
        raise InvalidConfigError(f"resonant response requires 0 <= rho < 1, got {rho}")
    depth = 1.0 - rho ** (n / 2)
    f = [rho * ((1.0 - rho ** (n / 2 - 1)) / depth) ** 2]
    f += [rho ** (n - k) * ((1.0 - rho) / depth) ** 2 for k in range(2, n + 1)]
    return ResponseProfile(
        n=n,
        rho=rho,
        total_phase=resonance_phase(n),
        f=tuple(f),
        a_squared=depth**2,
    )


def high_reflectivity_limit(n: int) -> ResponseProfile:
    """Resonant response in the limit rho -> 1.

    f_1 = (1 - 2/n)^2 and f_k = 4/n^2 for k != 1; for n = 2 all the
    energy crosses to the second port, for n = 4 it splits evenly, and
    for large n the cavity turns opaque (f_1 -> 1).
    """
    if n < 2:
        raise InvalidConfigError(f"port count must be >= 2, got {n}")
    f = ((1.0 - 2.0 / n) ** 2,) + (4.0 / n**2,) * (n - 1)
    return ResponseProfile(n=n, rho=1.0, total_phase=resonance_phase(n), f=f, a_squared=0.0)


def half_width(n: int, rho: float) -> float:
    """Analytic half-width of the resonance feature in f_1.

        delta_phi_HW = (1 - rho^(n/2)) / (2 rho^(n/4))

    valid for 0 < rho < 1 and approaching (n/4)(1 - rho) as rho -> 1.
    The underlying convention is half of the phase offset at which the
    response crosses midway between its resonance extremes; see
    :func:`measured_half_width`.
    """
    if n < 2:
        raise InvalidConfigError(f"port count must be >= 2, got {n}")
    if not 0.0 < rho < 1.0:
        raise InvalidConfigError(f"half-width requires 0 < rho < 1, got {rho}")
    return (1.0 - rho ** (n / 2)) / (2.0 * rho ** (n / 4))


def measured_half_width(n: int, rho: float) -> float:
    """Numerically measured half-width of the f_1 resonance dip.

    Locates, by bisection in the total phase, the offset from resonance
    at which f_1 crosses the midpoint between its resonance minimum and
    its anti-resonance maximum, and returns half that offset.  This is
    the same convention as the analytic :func:`half_width` (for which
    the crossing offset delta satisfies sin(delta/2) ~ the analytic
    value), making the two directly comparable.

    Raises
    ------
    ConvergenceError
        If the midpoint level cannot be bracketed.
    """
    if n < 2:
        raise InvalidConfigError(f"port count must be >= 2, got {n}")
    if not 0.0 < rho < 1.0:
        raise InvalidConfigError(f"half-width requires 0 < rho < 1, got {rho}")
    center = resonance_phase(n)

    def f1(offset: float) -> float:
        return float(response_fractions(n, rho, center + offset)[0])

    f_min, f_max = f1(0.0), f1(math.pi)
    midpoint = 0.5 * (f_min + f_max)
    lo, hi = 1e-12, math.pi - 1e-12
    if not (f1(lo) - midpoint) * (f1(hi) - midpoint) < 0.0:
        raise ConvergenceError("failed to bracket the half-width midpoint crossing")
    offset = bisect(lambda d: f1(d) - midpoint, lo, hi, xtol=1e-12)
    return 0.5 * float(offset)
