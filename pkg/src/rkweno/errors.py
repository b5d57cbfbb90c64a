"""Shared exception types."""

__all__ = [
    "DegenerateProblemError",
    "HyperbolicityError",
    "BoundarySolveError",
    "BlowupError",
]


class DegenerateProblemError(ValueError):
    """All wave speeds vanish; the global splitting scale is undefined."""


class HyperbolicityError(FloatingPointError):
    """State left the hyperbolic region (e.g. nonpositive density/pressure)."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class BoundarySolveError(RuntimeError):
    """The boundary-state system could not be solved."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class BlowupError(FloatingPointError):
    """NaN/Inf detected during time integration."""

    def __init__(self, message, t=None, step=None, location=None):
        super().__init__(message)
        self.t = t
        self.step = step
        self.location = location
