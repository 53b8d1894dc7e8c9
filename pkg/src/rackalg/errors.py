"""Exception types shared across the package."""
from .permgroups import CapExceeded


class InputError(ValueError):
    """Malformed input (wrong shape, out-of-range entry, bad file)."""


class ValidationError(ValueError):
    """Well-formed data that fails a mathematical condition.

    ``condition`` names the failed equation and ``witness`` holds the
    first offending indices, when available.
    """

    def __init__(self, message: str, condition: str = "", witness=None):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class BudgetExceeded(CapExceeded):
    """A search or computation ran past its configured budget.

    ``partial`` carries whatever was completed before stopping.
    """

    def __init__(self, message: str, count: int = 0, partial=None):
        super().__init__(message, count)
        self.partial = partial


__all__ = ["InputError", "ValidationError", "CapExceeded", "BudgetExceeded"]
