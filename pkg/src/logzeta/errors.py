"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class DivergentError(DomainError):
    """The requested integral or series does not converge."""


class AccuracyError(ArithmeticError):
    """A numeric routine failed to reach its requested accuracy.

    The best available estimate is attached as ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class ConsistencyError(RuntimeError):
    """Two exact routes that must agree produced different results."""
