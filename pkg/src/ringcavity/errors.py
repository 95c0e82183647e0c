"""Exception types shared across the library."""


class CavityError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidConfigError(CavityError, ValueError):
    """A cavity configuration or sweep specification is malformed."""


class SingularCavityError(CavityError):
    """The cavity is exactly on resonance with unit reflectivity.

    The input-output map is undefined there (the resonance denominator
    vanishes), so operations refuse to return amplified garbage.
    """


class SingularSystemError(SingularCavityError):
    """The beam-splitter-cascade linear system is (near-)singular."""


class StationaryPointError(CavityError):
    """Phase sensitivity requested where the response derivative vanishes."""


class ConvergenceError(CavityError):
    """An iterative search (bisection, golden section) failed to converge."""
