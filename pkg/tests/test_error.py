"""Define tests for the error module."""
from pyfekete.error import (
    DomainError,
    NumericalFailureError,
    PreconditionError,
    SizeError,
    format_error_message,
)


def test_format_error_message():
    """Tests empty messages fall back to a description."""
    assert format_error_message(ZeroDivisionError()) == "Division by zero"
    assert format_error_message(KeyError()) == "KeyError"
    assert format_error_message(DomainError("bad p")) == "bad p"


def test_numerical_failure_message():
    """Tests the operation and best residual are part of the message."""
    # Act
    error = NumericalFailureError("find_roots", "no convergence", 2.5e-4)
    # Assert
    assert str(error) == "find_roots: no convergence (best residual 2.500e-04)"
    assert error.operation == "find_roots"
    assert error.residual == 2.5e-4
    assert str(NumericalFailureError("c_delta", "stalled")) == "c_delta: stalled"


def test_domain_errors_are_value_errors():
    """Tests the domain error hierarchy."""
    size = SizeError("n", 25, 20)
    precondition = PreconditionError(3.14, "forbidden")
    assert isinstance(size, ValueError)
    assert isinstance(precondition, DomainError)
    assert size.value == 25
    assert precondition.angle == 3.14
