"""Input-output scattering, response and sensitivity of n-port ring cavities.

A ring cavity built from n identical lossless beam splitters is a linear
optical network: its n x n scattering matrix is available both in closed
form and through a constructive beam-splitter-cascade solve, and from it
follow the per-port energy response, coherent-beam propagation, resonance
behavior and shot-noise-limited interferometric phase sensitivity.
"""

from .beam import CoherentOutput, propagate_coherent
from .cavity import (
    SINGULARITY_EPS,
    CavityConfig,
    ScatteringMatrix,
    cascade_matrix,
    closed_form_matrix,
    resonance_denominator,
    verify_unitarity,
)
from .errors import (
    CavityError,
    ConvergenceError,
    InvalidConfigError,
    SingularCavityError,
    SingularSystemError,
    StationaryPointError,
)
from .response import (
    ResponseProfile,
    half_width,
    high_reflectivity_limit,
    measured_half_width,
    resonance_phase,
    response_at_resonance,
    response_closed,
    response_fractions,
    response_from_matrix,
    ring_port_order,
)
from .sensitivity import (
    SensitivityReport,
    dfdphi,
    optimize_working_point,
    overall_sensitivity,
    response_derivative,
    sensitivity_at,
    sensitivity_report,
)

__all__ = [
    "CavityConfig",
    "CavityError",
    "CoherentOutput",
    "ConvergenceError",
    "InvalidConfigError",
    "ResponseProfile",
    "ScatteringMatrix",
    "SensitivityReport",
    "SingularCavityError",
    "SingularSystemError",
    "SINGULARITY_EPS",
    "StationaryPointError",
    "cascade_matrix",
    "closed_form_matrix",
    "dfdphi",
    "half_width",
    "high_reflectivity_limit",
    "measured_half_width",
    "optimize_working_point",
    "overall_sensitivity",
    "propagate_coherent",
    "resonance_denominator",
    "resonance_phase",
    "response_at_resonance",
    "response_closed",
    "response_derivative",
    "response_fractions",
    "response_from_matrix",
    "ring_port_order",
    "sensitivity_at",
    "sensitivity_report",
    "verify_unitarity",
]

__version__ = "0.1.0"
