"""
Exceptions raised by the solver

Input problems derive from DataValidationError and are reported as usage
errors; numerical failures during a run derive from SolverError.
"""


class MixSolverError(Exception):
    """Base class for every error raised by this package"""


class DataValidationError(MixSolverError):
    """Used for data validation errors on cases, states and configuration"""


class UnknownCaseError(DataValidationError):
    """Raised when a case name is not in the registry"""

    def __init__(self, name: str, available):
        self.name = name
        self.available = sorted(available)
        super().__init__(
            f"Unknown case '{name}'. Available cases: {', '.join(self.available)}"
        )


class SchemeCompatibilityError(DataValidationError):
    """Raised when a scheme is used with a model or dimension it does not support"""


class ResolutionMismatchError(DataValidationError):
    """Raised when a reference cannot be restricted onto a coarse grid"""


class SolverError(MixSolverError):
    """Used for numerical failures during a run"""


class UnphysicalStateError(SolverError):
    """A cell or face holds a state the equations of state cannot accept"""

    def __init__(self, message: str, location=None):
        self.location = location
        if location is not None:
            message = f"{message} at {location}"
        super().__init__(message)


class ThermoDomainError(UnphysicalStateError):
    """Equation of state evaluated outside its domain"""


class RoeFailureError(UnphysicalStateError):
    """Roe average produced a non-real sound speed"""
