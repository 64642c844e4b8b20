"""Exception hierarchy shared by all modules."""


class TrivolterraError(Exception):
    """Base class for errors raised by this package."""


class DomainError(TrivolterraError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class GammaPoleError(DomainError):
    """Gamma function evaluated at a non-positive integer."""


class BudgetExhaustedError(TrivolterraError, RuntimeError):
    """Adaptive quadrature could not certify the requested tolerance."""


class GridMismatchError(TrivolterraError, ValueError):
    """Operators or functions living on different grids were combined."""


class SingularDiagonalError(TrivolterraError, ZeroDivisionError):
    """Triangular inverse requested for a matrix with a zero on its diagonal."""


class ResolutionError(TrivolterraError, ValueError):
    """A frequency or time is not resolved by the grid (h * lambda > pi / 4)."""


class BranchError(TrivolterraError, ArithmeticError):
    """A principal-branch logarithm would cross its cut."""
