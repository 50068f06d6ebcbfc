"""Provide exceptions to be raised by the `spectral_nodes` package.

All exceptions inherit from a `SpectralNodesError` base class.
"""


class SpectralNodesError(Exception):
    """Base exception for node generation, interpolation and collocation."""


class InvalidDegreeError(SpectralNodesError):
    """Raised when a polynomial degree is outside the range a formula supports."""


class ParityError(SpectralNodesError):
    """Raised when a node family or node polynomial is requested with the wrong parity of s."""


class BracketError(SpectralNodesError):
    """
    Raised when a sign-change bracket for a node polynomial fails. The zeros are known to
    exist, so this points at a bug rather than bad input.
    """


class IntervalError(SpectralNodesError):
    """Raised when an interval is empty or reversed."""


class LengthMismatchError(SpectralNodesError):
    """Raised when sample values do not match the number of nodes."""


class UnknownFunctionError(SpectralNodesError, LookupError):
    """Raised when a builtin function id is not registered."""


class UnknownProblemError(UnknownFunctionError):
    """Raised when a builtin Volterra problem id is not registered."""


class KernelSingularError(SpectralNodesError):
    """Raised when K(0, 0) = 0 so the first collocation row cannot be regularized."""


class QuadratureFailureError(SpectralNodesError):
    """Raised when an integrand sample is not finite."""


class SingularMatrixError(SpectralNodesError):
    """Raised when a collocation matrix has a pivot below the singularity threshold."""


class ConfigurationError(SpectralNodesError):
    """Raised when command line options are missing or inconsistent."""

    def __init__(self, flag, message):
        self.flag = flag
        super().__init__(f"{flag}: {message}")
