"""Define the error module for pyfekete."""
from typing import Optional

DEFAULT_ERROR_MESSAGES = {
    ZeroDivisionError: "Division by zero",
    OverflowError: "Numeric overflow",
    FloatingPointError: "Floating point error",
    ValueError: "Invalid value",
}


def format_error_message(error: Exception) -> str:
    """Format the error message based on a base error."""
    error_message = str(error)
    if not error_message:
        error_message = DEFAULT_ERROR_MESSAGES.get(type(error), type(error).__name__)
    return error_message


class FeketeError(Exception):
    """Define an error from the pyfekete library."""

    pass


class DomainError(FeketeError, ValueError):
    """Define an error raised when an argument is outside an operation's domain."""

    pass


class SizeError(DomainError):
    """Define an error raised when a size guard is exceeded."""

    def __init__(self, name: str, value: int, limit: int):
        """Create a new instance of the error."""
        self._name = name
        self._value = value
        self._limit = limit
        super().__init__("{} = {} exceeds the limit {}".format(name, value, limit))

    @property
    def value(self) -> int:
        """Get the rejected value."""
        return self._value

    @property
    def limit(self) -> int:
        """Get the limit that was exceeded."""
        return self._limit


class PreconditionError(DomainError):
    """Define an error raised when a zero angle lies in a forbidden arc."""

    def __init__(self, angle: float, message: str):
        """Create a new instance of the error."""
        self._angle = angle
        super().__init__(message)

    @property
    def angle(self) -> float:
        """Get the offending angle."""
        return self._angle


class ExactArithmeticError(FeketeError):
    """Define an error when exact integer arithmetic leaves the 64-bit range."""

    pass


class NumericalFailureError(FeketeError):
    """Define an error when a numerical method fails to converge."""

    def __init__(
        self, operation: str, message: str, residual: Optional[float] = None
    ):
        """Create a new instance of the error."""
        self._operation = operation
        self._residual = residual
        if residual is not None:
            message = "{} (best residual {:.3e})".format(message, residual)
        super().__init__("{}: {}".format(operation, message))

    @property
    def operation(self) -> str:
        """Get the operation that failed."""
        return self._operation

    @property
    def residual(self) -> Optional[float]:
        """Get the best residual reached before failing."""
        return self._residual
