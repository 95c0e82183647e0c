"""Shot-noise-limited phase sensitivity of the ring cavity.

Monitoring the photocurrent of output port k around a working point
phi* resolves fluctuations of the total internal phase down to

    delta_phi_k = sqrt(f_k) / (|alpha| |d f_k / d phi|),

the coherent-state form of the generic signal-to-noise ratio.  This
module provides the analytic phase derivative of the response, the
per-port sensitivity, a pole-aware optimizer for the working point, and
the aggregate sensitivity delta_phi_1 / sqrt(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cavity import SINGULARITY_EPS, CavityConfig
from .errors import (
    ConvergenceError,
    InvalidConfigError,
    SingularCavityError,
    StationaryPointError,
)
from .response import (
    _resonance_quadratic,
    resonance_phase,
    response_fractions,
    squared_denominator,
)

#: Derivative magnitudes below this are treated as exact stationary points.
STATIONARY_EPS = 1e-15

#: Grid points masked as poles when scanning for the optimal working point.
POLE_MASK_EPS = 1e-12

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def response_derivative(n: int, rho, phi, k: int):
    """d f_k / d phi by the quotient rule, vectorized over rho and phi.

    With s = (-1)^(1+n) and D = |A_n|^2 = 1 + rho^n + 2 s rho^(n/2) cos(phi):

        d f_1/d phi = rho [(-2 s rho^(n/2-1) sin phi) D
                           - N (-2 s rho^(n/2) sin phi)] / D^2,
            N = 1 + rho^(n-2) + 2 s rho^(n/2-1) cos phi
        d f_k/d phi = (1-rho)^2 rho^(n-k) 2 s rho^(n/2) sin(phi) / D^2,  k >= 2
    """
    rho = np.asarray(rho, dtype=float)
    phi = np.asarray(phi, dtype=float)
    sign = (-1.0) ** (1 + n)
    denom = squared_denominator(n, rho, phi)
    sin_phi = np.sin(phi)
    if k == 1:
        numer = _resonance_quadratic(rho ** (n / 2 - 1), phi, n)
        value = rho * (
            (-2.0 * sign * rho ** (n / 2 - 1) * sin_phi) * denom
            - numer * (-2.0 * sign * rho ** (n / 2) * sin_phi)
        ) / denom**2
    else:
        value = (1.0 - rho) ** 2 * rho ** (n - k) * 2.0 * sign * rho ** (n / 2) * sin_phi / denom**2
    return value


def dfdphi(config: CavityConfig, k: int) -> float:
    """Analytic derivative of f_k with respect to the total phase.

    Evaluated at the configuration's total phase; matches central finite
    differences of the closed-form response.

    Raises
    ------
    SingularCavityError
        For a resonant cavity with unit reflectivity.
    """
    _check_port(config.n, k)
    phi = config.total_phase()
    if squared_denominator(config.n, config.rho, phi) <= SINGULARITY_EPS**2:
        raise SingularCavityError("resonant cavity with unit reflectivity")
    return float(response_derivative(config.n, config.rho, phi, k))


def sensitivity_at(config: CavityConfig, k: int, alpha_abs: float = 1.0) -> float:
    """Minimum detectable phase fluctuation on port k at the config's phase.

    Raises
    ------
    StationaryPointError
        If |d f_k/d phi| < STATIONARY_EPS: the working point sits on a
        stationary point of the response and the sensitivity diverges.
    """
    if alpha_abs <= 0.0:
        raise InvalidConfigError(f"input amplitude must be positive, got {alpha_abs}")
    derivative = dfdphi(config, k)
    if abs(derivative) < STATIONARY_EPS:
        raise StationaryPointError(
            f"response derivative vanishes at phi = {config.total_phase()!r}"
        )
    f_k = float(response_fractions(config.n, config.rho, config.total_phase())[k - 1])
    return math.sqrt(f_k) / (alpha_abs * abs(derivative))


def _rescaled_sensitivity(n: int, rho: float, phi: float, k: int) -> float:
    """delta_phi_k at unit input amplitude; inf at poles (for scanning)."""
    derivative = float(response_derivative(n, rho, phi, k))
    if abs(derivative) < STATIONARY_EPS:
        return math.inf
    f_k = float(response_fractions(n, rho, phi)[k - 1])
    return math.sqrt(f_k) / abs(derivative)


def optimize_working_point(n: int, rho: float, k: int = 1) -> tuple[float, float]:
    """Working point phi* in (0, 2 pi) minimizing delta_phi_k, and its value.

    A dense scan (4096 points, poles masked) brackets the minimum, which
    a golden-section refinement narrows to |delta phi| < 1e-10.  Because
    the response depends on phi through cos(phi) only, the sensitivity is
    symmetric about pi and the representative in (0, pi] is returned.
    The optimum sits close to, but strictly off, the resonance phase.

    Raises
    ------
    ConvergenceError
        If every scanned point is masked as a pole.
    """
    _check_port(n, k)
    if not 0.0 < rho < 1.0:
        raise ConvergenceError(f"working-point search requires 0 < rho < 1, got {rho}")
    grid = np.linspace(0.0, 2.0 * math.pi, 4098)[1:-1]
    derivative = response_derivative(n, rho, grid, k)
    fractions = response_fractions(n, rho, grid)[:, k - 1]
    mask = np.abs(derivative) >= POLE_MASK_EPS
    if not mask.any():
        raise ConvergenceError("sensitivity has no non-stationary point on the scan grid")
    values = np.full(grid.shape, np.inf)
    values[mask] = np.sqrt(fractions[mask]) / np.abs(derivative[mask])
    best = int(np.argmin(values))
    lo = grid[best - 1] if best > 0 else grid[0] / 2.0
    hi = grid[best + 1] if best < grid.size - 1 else grid[-1]
    phi_star, minimum = _golden_section(
        lambda p: _rescaled_sensitivity(n, rho, p, k), lo, hi, tol=1e-10
    )
    if not math.isfinite(minimum):
        raise ConvergenceError("golden-section refinement landed on a pole")
    if phi_star > math.pi:
        phi_star = 2.0 * math.pi - phi_star
    return float(phi_star), float(minimum)


def _golden_section(func, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Golden-section minimization on [lo, hi] to interval width tol."""
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = func(c), func(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = func(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = func(d)
    x = c if fc < fd else d
    return x, min(fc, fd)


def overall_sensitivity(n: int, rho: float, phi: float, alpha_abs: float = 1.0) -> float:
    """Aggregate sensitivity delta_phi_1 / sqrt(n) at the given total phase.

    Meaningful in the high-reflectivity regime, where the per-port
    sensitivities coalesce and the n ports act as independent readouts.
    """
    config = CavityConfig.uniform(n, rho, phi)
    return sensitivity_at(config, k=1, alpha_abs=alpha_abs) / math.sqrt(n)


@dataclass(frozen=True)
class SensitivityReport:
    """Per-port and aggregate sensitivity at the optimal working point.

    ``per_port[k-1]`` is delta_phi_k rescaled to unit input amplitude,
    evaluated at ``working_point`` (the phi* optimal for port 1);
    ``overall`` is per_port[0] / sqrt(n).  Divide by ``alpha_abs`` to get
    physical radians for a given input amplitude.
    """

    n: int
    rho: float
    working_point: float
    per_port: tuple[float, ...]
    overall: float
    alpha_abs: float


def sensitivity_report(n: int, rho: float, alpha_abs: float = 1.0) -> SensitivityReport:
    """Optimize the port-1 working point and tabulate all port sensitivities."""
    phi_star, _ = optimize_working_point(n, rho, k=1)
    per_port = tuple(_rescaled_sensitivity(n, rho, phi_star, k) for k in range(1, n + 1))
    return SensitivityReport(
        n=n,
        rho=rho,
        working_point=phi_star,
        per_port=per_port,
        overall=per_port[0] / math.sqrt(n),
        alpha_abs=alpha_abs,
    )


def _check_port(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise InvalidConfigError(f"port index must lie in 1..{n}, got {k}")
