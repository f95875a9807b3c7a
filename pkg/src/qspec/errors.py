"""Shared exception types.

The CLI maps these onto process exit codes: DomainError -> 2,
ResourceLimitError and EstimationError -> 3, verification failures -> 4.
"""

__all__ = [
    "DomainError",
    "ResourceLimitError",
    "NonExactDivisionError",
    "EstimationError",
]


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""


class NonExactDivisionError(ArithmeticError):
    """Laurent polynomial division left a nonzero remainder."""


class EstimationError(RuntimeError):
    """An iterative estimate failed to stabilize within its term budget."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics if diagnostics is not None else {}
