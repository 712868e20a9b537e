"""Exception hierarchy shared by every module in the package."""


class RadiiError(Exception):
    """Base class for all errors raised by :mod:`radii`."""


class InputError(RadiiError, ValueError):
    """Malformed or invalid input (dimension mismatch, NaN, bad gauge...)."""


class NotInHullError(InputError):
    """Target point is not in the convex hull of the given points.

    ``separator`` is a vector ``a`` with ``a @ target > max_i a @ points[i]``.
    """

    def __init__(self, message, separator, gap):
        super().__init__(message)
        self.separator = separator
        self.gap = gap


class SolverFailure(RadiiError, RuntimeError):
    """A numerical routine stalled or failed to converge.

    ``incumbent`` carries the best point found so far, if any.
    """

    def __init__(self, message, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent


class BudgetError(RadiiError):
    """A combinatorial product exceeded its configured cap."""


class NoCertificateError(RadiiError):
    """No optimal-containment certificate exists (degenerate radius 0)."""


class InvariantViolation(RadiiError):
    """An input claimed a property (e.g. balance) that does not hold numerically."""
