from typing import Optional, Sequence

from polyhedra.rational import format_vector


class SetOptimizationError(ValueError):
    """Base class for errors raised by the set optimization layer."""


class EmptyGraphError(SetOptimizationError):
    """Raised when a derived mapping or cone is requested for a mapping with empty graph."""

    def __init__(self, what: str) -> None:
        super().__init__(f"Empty graph: {what} requires gr F to be nonempty")


class InfeasibleProblemError(SetOptimizationError):
    """Raised when an operation needs dom F to be nonempty."""

    def __init__(self, what: str) -> None:
        super().__init__(f"Infeasible problem: {what} requires dom F to be nonempty")


class IrregularConeError(SetOptimizationError):
    """
    Raised when the ordering cone violates lin C ⊆ G(0) ⊆ C.

    Attributes:
        suggested_cone: G(0) + C, a cone that leaves the problem unchanged.
    """

    def __init__(self, message: str, suggested_cone=None) -> None:
        self.suggested_cone = suggested_cone
        super().__init__(message)


class MembershipError(SetOptimizationError):
    """Raised when a candidate element lies outside the set it must belong to."""

    def __init__(self, role: str, element: Sequence, message: Optional[str] = None) -> None:
        self.role = role
        self.element = tuple(element)
        super().__init__(message or f"{role} {format_vector(self.element)} violates its membership requirement")


class CandidateModeError(SetOptimizationError):
    """Raised when a solution candidate does not fit the requested solution concept."""
