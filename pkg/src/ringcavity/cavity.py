"""Scattering matrix of an n-port ring cavity.

The cavity is a closed loop of n identical lossless beam splitters
(transmissivity tau, reflectivity rho = 1 - tau) with a phase shift
phi_k on the internal arm between splitter k and splitter k+1.  The
n x n complex matrix M maps the external input amplitudes a_j onto the
output amplitudes b_k and is computed here by two independent routes:

* :func:`closed_form_matrix` evaluates an explicit analytic expression
  for the first row and fills the remaining rows by simultaneous cyclic
  relabeling of ports and phases.
* :func:`cascade_matrix` assembles the beam-splitter relations into a
  cyclic linear system for the internal amplitudes and solves it
  column by column, never touching the closed form.

The two constructions serve as mutual oracles; they agree to machine
precision away from the singular limit rho = 1 on resonance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .errors import InvalidConfigError, SingularCavityError, SingularSystemError

#: Below this magnitude of the resonance denominator A_n the cavity is
#: treated as singular (reachable only at rho = 1 exactly on resonance).
SINGULARITY_EPS = 1e-9


@dataclass(frozen=True)
class CavityConfig:
    """Immutable description of an n-port ring cavity.

    Parameters
    ----------
    n : int
        Number of ports (and beam splitters), n >= 2.
    rho : float
        Power reflectivity of every beam splitter, 0 <= rho <= 1.
        The transmissivity is tau = 1 - rho.
    phases : sequence of float
        The n internal phase shifts phi_1 .. phi_n in radians.
    """

    n: int
    rho: float
    phases: tuple[float, ...]

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 2:
            raise InvalidConfigError(f"port count must be an integer >= 2, got {self.n}")
        if not 0.0 <= self.rho <= 1.0:
            raise InvalidConfigError(f"reflectivity must lie in [0, 1], got {self.rho}")
        phases = tuple(float(p) for p in self.phases)
        if len(phases) != self.n:
            raise InvalidConfigError(
                f"expected {self.n} internal phases, got {len(phases)}"
            )
        object.__setattr__(self, "phases", phases)

    @classmethod
    def uniform(cls, n: int, rho: float, total_phase: float) -> "CavityConfig":
        """Config with the total phase split evenly over the n arms."""
        return cls(n=n, rho=rho, phases=(total_phase / n,) * n)

    @property
    def tau(self) -> float:
        """Beam-splitter transmissivity tau = 1 - rho."""
        return 1.0 - self.rho

    def total_phase(self) -> float:
        """Total internal phase phi = sum of the phi_k."""
        return float(sum(self.phases))


def resonance_denominator(config: CavityConfig) -> complex:
    """The complex factor A_n = 1 + rho^(n/2) (-1)^(1+n) e^(i phi).

    Its magnitude vanishes only for rho = 1 exactly on resonance; every
    entry of the scattering matrix carries a 1/A_n prefactor.
    """
    n, rho = config.n, config.rho
    sign = (-1.0) ** (1 + n)
    return 1.0 + sign * rho ** (n / 2) * np.exp(1j * config.total_phase())


@dataclass(frozen=True)
class ScatteringMatrix:
    """An n x n complex unitary map from input to output mode amplitudes."""

    n: int
    entries: NDArray[np.complex128] = field(repr=False)

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=np.complex128)
        if entries.shape != (self.n, self.n):
            raise InvalidConfigError(
                f"expected a {self.n}x{self.n} matrix, got shape {entries.shape}"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def entry(self, k: int, j: int) -> complex:
        """Matrix element M_kj with 1-based port indices."""
        if not (1 <= k <= self.n and 1 <= j <= self.n):
            raise InvalidConfigError(f"port indices must lie in 1..{self.n}")
        return complex(self.entries[k - 1, j - 1])

    def unitarity_defect(self) -> float:
        """Max-norm deviation of M^dagger M from the identity."""
        return verify_unitarity(self)


def _first_row(n: int, rho: float, phases: NDArray[np.float64]) -> NDArray[np.complex128]:
    """Output-port-1 amplitudes for the given phase vector.

    M_11 = sqrt(rho) [1 + (-1)^(1+n) rho^(n/2-1) e^(i phi)] / A_n and,
    for j >= 2, M_1j = (-1)^(n+j) tau rho^((n-j)/2) e^(i theta_1j) / A_n
    with theta_1j = phi_1 + phi_(j+1) + ... + phi_n.
    """
    tau = 1.0 - rho
    sign = (-1.0) ** (1 + n)
    phi = phases.sum()
    a_n = 1.0 + sign * rho ** (n / 2) * np.exp(1j * phi)
    row = np.empty(n, dtype=np.complex128)
    row[0] = np.sqrt(rho) * (1.0 + sign * rho ** (n / 2 - 1) * np.exp(1j * phi))
    for j in range(2, n + 1):
        theta = phases[0] + phases[j:].sum()
        row[j - 1] = (-1.0) ** (n + j) * tau * rho ** ((n - j) / 2) * np.exp(1j * theta)
    return row / a_n


def closed_form_matrix(config: CavityConfig) -> ScatteringMatrix:
    """Scattering matrix from the analytic entry formulas.

    Row 1 comes from :func:`_first_row`; row k is obtained by relabeling
    ports cyclically, j -> ((j - k) mod n) + 1, while shifting the phase
    vector by the same amount, phi'_m = phi_((m + k - 2) mod n) + 1.
    The convention is pinned by entrywise agreement with
    :func:`cascade_matrix`, not taken on trust.

    Raises
    ------
    SingularCavityError
        If |A_n| < SINGULARITY_EPS (rho = 1 on resonance).
    """
    n = config.n
    if abs(resonance_denominator(config)) < SINGULARITY_EPS:
        raise SingularCavityError(
            "resonant cavity with unit reflectivity: scattering matrix undefined"
        )
    phases = np.asarray(config.phases)
    m = np.empty((n, n), dtype=np.complex128)
    for k in range(1, n + 1):
        shifted = np.array([phases[(idx + k - 1) % n] for idx in range(n)])
        row = _first_row(n, config.rho, shifted)
        for j in range(1, n + 1):
            m[k - 1, j - 1] = row[(j - k) % n]
    return ScatteringMatrix(n=n, entries=m)


def cascade_matrix(config: CavityConfig) -> ScatteringMatrix:
    """Scattering matrix from a constructive beam-splitter-cascade solve.

    Each splitter k obeys b_k = sqrt(tau) d_k + sqrt(rho) a_k and
    c_(k+1) = -sqrt(rho) d_k + sqrt(tau) a_k (indices cyclic), with the
    internal arms matched through d_k = e^(i phi_k) c_k.  Eliminating
    d_k yields the cyclic linear system

        sqrt(rho) e^(i phi_k) c_k + c_(k+1) = sqrt(tau) a_k,

    which is solved for all unit inputs at once; the resulting outputs
    form the matrix columns.  No use is made of the closed form, so this
    operation is an independent oracle for it.

    Raises
    ------
    SingularSystemError
        If the assembled system is (near-)singular.
    """
    n, rho, tau = config.n, config.rho, config.tau
    if abs(resonance_denominator(config)) < SINGULARITY_EPS:
        # |det| of the cyclic system equals |A_n|; refuse the solve.
        raise SingularSystemError(
            "beam-splitter cascade system is singular (rho = 1 on resonance)"
        )
    sqrt_rho, sqrt_tau = np.sqrt(rho), np.sqrt(tau)
    internal_phase = np.exp(1j * np.asarray(config.phases))

    system = np.zeros((n, n), dtype=np.complex128)
    for k in range(n):
        system[k, k] += sqrt_rho * internal_phase[k]
        system[k, (k + 1) % n] += 1.0
    # One RHS column per excited input port.
    circulating = np.linalg.solve(system, sqrt_tau * np.eye(n, dtype=np.complex128))
    outputs = sqrt_tau * internal_phase[:, None] * circulating + sqrt_rho * np.eye(n)
    return ScatteringMatrix(n=n, entries=outputs)


def verify_unitarity(matrix: ScatteringMatrix | NDArray[np.complex128]) -> float:
    """Max-norm deviation of M^dagger M from the identity.

    Returns the residual; the caller chooses the tolerance.
    """
    m = matrix.entries if isinstance(matrix, ScatteringMatrix) else np.asarray(matrix)
    gram = m.conj().T @ m
    return float(np.abs(gram - np.eye(m.shape[0])).max())
