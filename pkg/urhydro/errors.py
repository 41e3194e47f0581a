"""
Exception hierarchy for urhydro
Every failure raised by the library derives from UrHydroError so that
scripts can map it onto an exit code.
"""

from typing import Optional, Sequence

# Exit codes used by scripts/run_riemann.py
EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_SOLVER_FAILURE = 3


class UrHydroError(Exception):
    """Base class for all urhydro errors"""

    exit_code = EXIT_SOLVER_FAILURE


class DomainError(UrHydroError, ValueError):
    """Argument outside the domain of a formula (rho <= 0, |v| >= 1, ...)"""


class UnphysicalStateError(UrHydroError):
    """Conserved state that does not map onto a subluminal primitive state"""


class VacuumLimitError(UrHydroError):
    """Rarefaction driven below the density floor (vacuum is not supported)"""


class InconsistentInputError(UrHydroError):
    """Inputs that are supposed to lie on a wave curve but do not"""


class SolverFailureError(UrHydroError):
    """Internal solver failure; signals a bug for valid inputs"""


class NoIntersectionError(SolverFailureError):
    """Left and right wave curves could not be bracketed"""


class PositivityFailureError(UrHydroError):
    """Godunov update produced a cell that cannot be converted to primitives"""

    def __init__(self, cell_index: int, state: Sequence[float], reason: Optional[str] = None):
        self.cell_index = cell_index
        self.state = tuple(float(s) for s in state)
        message = f"cell {cell_index} left the physical domain: U={self.state}"
        if reason:
            message += f" ({reason})"
        super().__init__(message)


class ConfigError(UrHydroError):
    """Problem configuration failed validation"""

    exit_code = EXIT_CONFIG_ERROR
