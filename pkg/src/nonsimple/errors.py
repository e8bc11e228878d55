"""Exception types shared across the package.

Each class carries the process exit code the command line maps it to.
"""


class NonsimpleError(Exception):
    exit_code = 1


class InvalidInputError(NonsimpleError, ValueError):
    exit_code = 2


class DegenerateParameterError(InvalidInputError):
    """The parameter t is a root of f, so the specialized polynomial has a repeated root."""


class UnsupportedPrimeError(InvalidInputError):
    pass


class BadReductionError(InvalidInputError):
    pass


class BelowThresholdError(InvalidInputError):
    """Raised when B is smaller than the threshold B0 required by the level optimizer."""

    def __init__(self, message, log_B0):
        super().__init__(message)
        self.log_B0 = log_B0


class ResourceLimitError(NonsimpleError):
    exit_code = 3


class ConsistencyError(NonsimpleError, ArithmeticError):
    """Internal arithmetic check failed; indicates a bug rather than bad input."""

    exit_code = 1


class CacheIOError(NonsimpleError, OSError):
    exit_code = 4
