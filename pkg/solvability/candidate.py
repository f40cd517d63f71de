"""
Solution candidates (S̄, Ŝ, S̃): points, directions and kernel directions.
"""
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from polyhedra.exceptions import DimensionMismatchError
from polyhedra.rational import Scalar, Vector, as_vector
from set_optimization.exceptions import CandidateModeError


def _vectors(values: Iterable[Sequence[Scalar]]) -> Tuple[Vector, ...]:
    return tuple(sorted({as_vector(v) for v in values}))


@dataclass(frozen=True)
class SolutionCandidate:
    """
    Finite sets of points S̄, directions Ŝ and kernel directions S̃ in ℝⁿ.

    Elements are deduplicated and sorted. Classic-mode candidates leave
    `kernel_directions` empty.
    """

    points: Tuple[Vector, ...]
    directions: Tuple[Vector, ...] = ()
    kernel_directions: Tuple[Vector, ...] = ()

    def __post_init__(self) -> None:
        points = _vectors(self.points)
        if not points:
            raise CandidateModeError("A solution candidate needs at least one point")
        directions = _vectors(self.directions)
        kernel_directions = _vectors(self.kernel_directions)
        n = len(points[0])
        for v in points + directions + kernel_directions:
            if len(v) != n:
                raise DimensionMismatchError(n, len(v), "candidate element")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "directions", directions)
        object.__setattr__(self, "kernel_directions", kernel_directions)

    @property
    def n(self) -> int:
        return len(self.points[0])

    @property
    def all_directions(self) -> Tuple[Vector, ...]:
        return _vectors(self.directions + self.kernel_directions)

    def merged(self) -> "SolutionCandidate":
        """Classic-mode candidate with Ŝ ∪ S̃ as its directions."""
        return SolutionCandidate(self.points, self.all_directions, ())
