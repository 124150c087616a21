"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ConsistencyError(ArithmeticError):
    """Two computations that must agree did not.

    Raised by internal guards (Stirling convention, negative powers,
    inexact divisions); seeing one means a bug, not bad input.
    """


class ResourceLimitError(RuntimeError):
    """A request exceeds a configured cost cap."""
