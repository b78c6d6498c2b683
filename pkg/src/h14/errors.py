"""Exception hierarchy shared by all modules.

Two broad classes matter for the CLI exit-code contract: usage/config
problems (exit 2) and violated mathematical preconditions (exit 3).
A failed verification is reported as CheckFailure (exit 1).
"""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(ToolkitError):
    """Caller passed malformed or inconsistent input."""


class ShapeError(UsageError):
    """Matrix/vector dimensions do not match."""


class FieldMismatchError(UsageError):
    """Operands live in different coefficient fields."""


class ValidationError(UsageError):
    """Instance data violates a sign or positivity constraint."""


class GradingError(UsageError):
    """A generator is not homogeneous for the requested weights."""


class ConfigError(UsageError):
    """Config file is malformed or contains unknown keys."""


class PreconditionError(ToolkitError):
    """A mathematical precondition of the operation fails."""


class SingularMatrixError(PreconditionError):
    """Square matrix with zero determinant where invertibility is required."""


class LinealityError(PreconditionError):
    """The cone contains a line; carries one line direction."""

    def __init__(self, direction):
        self.direction = tuple(direction)
        super().__init__(f"cone is not pointed; contains the line through {self.direction}")


class IndependenceError(PreconditionError):
    """Monomials are algebraically dependent where independence is required."""


class ConditionError(PreconditionError):
    """A rational-inequality hypothesis fails (e.g. the ratio sum is >= 1)."""


class CheckFailure(ToolkitError):
    """A verification assertion did not hold."""
