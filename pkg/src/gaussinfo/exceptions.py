"""Exception types shared across the toolkit."""


class GaussInfoError(Exception):
    """Base class for all toolkit-specific errors."""


class InvalidStateError(GaussInfoError, ValueError):
    """A correlation matrix violates the uncertainty relation or related constraints."""


class UnsupportedInputError(GaussInfoError, ValueError):
    """The input is valid but outside what this operation supports."""


class NumericalFailureError(GaussInfoError, ArithmeticError):
    """A numerical routine produced results outside its internal consistency bounds."""


class TruncationError(GaussInfoError, ValueError):
    """A finite Fock-space truncation is too small for the requested accuracy."""
