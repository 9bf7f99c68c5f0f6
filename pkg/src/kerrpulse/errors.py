"""Exception types raised by kerrpulse."""


class KerrPulseError(Exception):
    """Base class for all library errors."""


class RegimeError(KerrPulseError, ValueError):
    """A formula was requested outside the parameter regime where it holds."""


class UnsupportedVariantError(KerrPulseError, ValueError):
    """The response-kernel variant does not support the requested operation."""


class QuadratureError(KerrPulseError, RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance.

    The best estimate and its error bound are attached so callers can decide
    whether the result is still usable.
    """

    def __init__(self, message, value=None, error_bound=None):
        super().__init__(message)
        self.value = value
        self.error_bound = error_bound


class TruncationError(KerrPulseError, ValueError):
    """A truncated integration domain is too small for the integrand's tail."""


class CutoffError(KerrPulseError, ValueError):
    """Fock-space cutoff is too small for the requested coherent state."""


class NoRootError(KerrPulseError, ArithmeticError):
    """No admissible root was found (internal error for valid inputs)."""
