"""Exception types raised across the package."""


class QuvacError(Exception):
    """Base class for all quvac errors."""


class DimensionMismatch(QuvacError):
    """Operands live on spaces of different dimension."""


class InvalidDimension(QuvacError):
    """Requested qudit dimension is not supported (d >= 2 required)."""


class NotHermitian(QuvacError):
    """Matrix deviates from its adjoint beyond the Hermiticity tolerance."""


class ConvergenceFailure(QuvacError):
    """The eigensolver did not converge."""


class NotPositive(QuvacError):
    """Matrix has an eigenvalue below the positivity tolerance."""

    def __init__(self, message, min_eigenvalue=None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class BadTrace(QuvacError):
    """Matrix trace deviates from 1 beyond the trace tolerance."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class InvalidState(QuvacError):
    """Input matrix is not a valid density operator."""


class UnknownEigenvalue(QuvacError):
    """A selected eigenvalue does not match the observable's spectrum."""

    def __init__(self, message, value=None, nearest=None):
        super().__init__(message)
        self.value = value
        self.nearest = nearest


class InvalidChannel(QuvacError):
    """Kraus elements violate the trace-non-increasing condition."""


class ParseError(QuvacError):
    """A channel, state or observable payload is malformed."""


class UnknownCase(QuvacError):
    """Requested demo case does not exist."""
