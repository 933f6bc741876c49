"""Exception types shared across the package."""


class VariableMismatchError(ValueError):
    """Two polynomials tagged with different variables were combined."""


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured size limit or visit budget."""

    def __init__(self, message, limit):
        super().__init__(message)
        self.limit = limit


class BudgetExceededError(ResourceLimitError):
    """A brute-force count would visit more tuples than the budget allows."""


class OraclePreconditionError(ValueError):
    """A counting oracle was called outside the range where the formula applies."""
