class PolyhedronError(ValueError):
    """Base class for errors raised by the exact polyhedral kernel."""


class EmptyPolyhedronError(PolyhedronError):
    """Raised when an operation is undefined on the empty set."""


class DimensionMismatchError(PolyhedronError):
    """Raised when operands live in different ambient spaces."""

    def __init__(self, expected: int, actual: int, what: str = "operand") -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"Dimension mismatch for {what}: expected {expected}, got {actual}")
