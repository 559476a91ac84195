"""Exception types shared across the package."""


class BlochGeometryError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BlochGeometryError, ValueError):
    """Invalid argument or violated precondition (CLI exit code 2)."""


class NumericError(BlochGeometryError, ArithmeticError):
    """Numerical failure, e.g. eigensolver non-convergence (CLI exit code 3)."""
