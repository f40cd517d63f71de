"""
Representations of convex polyhedra.

`HPolyhedron` is the inequality form {z : a·z ≥ β for every row}, `VPolyhedron`
the generator form conv(points) + cone(rays) + span(lines). Both are immutable
and store their data in canonical order, so equal inputs give equal objects.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .exceptions import DimensionMismatchError
from .linalg import dot
from .rational import (
    Scalar,
    Vector,
    as_fraction,
    as_vector,
    canonical_direction,
    canonical_line,
    format_fraction,
    integer_scale,
    unit_vector,
)


@dataclass(frozen=True, order=True)
class LinearInequality:
    """
    One row `coefficients · z ≥ rhs`.

    Rows are stored gcd-normalized: coefficients and rhs are coprime integers
    after a positive rescaling.
    """

    coefficients: Vector
    rhs: Fraction

    def __post_init__(self) -> None:
        scaled = integer_scale(tuple(self.coefficients) + (self.rhs,))
        object.__setattr__(self, "coefficients", scaled[:-1])
        object.__setattr__(self, "rhs", scaled[-1])

    @classmethod
    def build(cls, coefficients: Iterable[Scalar], rhs: Scalar = 0) -> "LinearInequality":
        return cls(as_vector(coefficients), as_fraction(rhs))

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    @property
    def is_trivial(self) -> bool:
        """True for `0 ≥ β` with β ≤ 0, which every point satisfies."""
        return not any(self.coefficients) and self.rhs <= 0

    @property
    def is_contradiction(self) -> bool:
        return not any(self.coefficients) and self.rhs > 0

    def slack(self, point: Sequence[Fraction]) -> Fraction:
        return dot(self.coefficients, point) - self.rhs

    def holds_at(self, point: Sequence[Fraction]) -> bool:
        return self.slack(point) >= 0

    def homogeneous(self) -> "LinearInequality":
        return LinearInequality(self.coefficients, Fraction(0))

    def describe(self, names: Sequence[str]) -> str:
        terms = []
        for c, name in zip(self.coefficients, names):
            if c == 0:
                continue
            magnitude = abs(c)
            text = name if magnitude == 1 else f"{format_fraction(magnitude)}{name}"
            if not terms:
                terms.append(text if c > 0 else f"-{text}")
            else:
                terms.append(f"+ {text}" if c > 0 else f"- {text}")
        left = " ".join(terms) if terms else "0"
        return f"{left} >= {format_fraction(self.rhs)}"


def _contradiction(dimension: int) -> LinearInequality:
    return LinearInequality(tuple(Fraction(0) for _ in range(dimension)), Fraction(1))


@dataclass(frozen=True)
class HPolyhedron:
    """
    Convex polyhedron {z ∈ ℝ^d : every inequality holds}.

    Trivial rows are dropped, duplicates merged and rows sorted. A system with a
    contradictory row collapses to the single row `0 ≥ 1`.
    """

    dimension: int
    inequalities: Tuple[LinearInequality, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.dimension < 0:
            raise ValueError(f"Dimension must be nonnegative, got {self.dimension}")
        rows = set()
        for row in self.inequalities:
            if row.dimension != self.dimension:
                raise DimensionMismatchError(self.dimension, row.dimension, "inequality")
            if row.is_contradiction:
                rows = {_contradiction(self.dimension)}
                break
            if not row.is_trivial:
                rows.add(row)
        object.__setattr__(self, "inequalities", tuple(sorted(rows)))

    @classmethod
    def from_rows(cls, dimension: int, rows: Iterable[Tuple[Iterable[Scalar], Scalar]]) -> "HPolyhedron":
        """Build from `(coefficients, rhs)` pairs."""
        return cls(dimension, tuple(LinearInequality.build(a, b) for a, b in rows))

    @classmethod
    def universe(cls, dimension: int) -> "HPolyhedron":
        return cls(dimension, ())

    @classmethod
    def empty(cls, dimension: int) -> "HPolyhedron":
        return cls(dimension, (_contradiction(dimension),))

    @classmethod
    def origin(cls, dimension: int) -> "HPolyhedron":
        rows = []
        for i in range(dimension):
            e = unit_vector(dimension, i)
            rows.append(LinearInequality(e, Fraction(0)))
            rows.append(LinearInequality(tuple(-v for v in e), Fraction(0)))
        return cls(dimension, tuple(rows))

    @property
    def is_homogeneous(self) -> bool:
        return all(row.rhs == 0 for row in self.inequalities)

    @property
    def is_trivially_empty(self) -> bool:
        return any(row.is_contradiction for row in self.inequalities)

    def contains_point(self, point: Sequence[Fraction]) -> bool:
        if len(point) != self.dimension:
            raise DimensionMismatchError(self.dimension, len(point), "point")
        return all(row.holds_at(point) for row in self.inequalities)

    def with_rows(self, extra: Iterable[LinearInequality]) -> "HPolyhedron":
        return HPolyhedron(self.dimension, self.inequalities + tuple(extra))

    def describe(self, names: Sequence[str]) -> list:
        return [row.describe(names) for row in self.inequalities]


@dataclass(frozen=True)
class VPolyhedron:
    """
    Convex polyhedron conv(points) + cone(rays) + span(lines).

    The set is empty iff `points` is empty; rays and lines are then dropped too.
    Rays are rescaled to coprime integers (orientation kept), lines additionally
    get a positive first nonzero entry.
    """

    dimension: int
    points: Tuple[Vector, ...] = field(default=())
    rays: Tuple[Vector, ...] = field(default=())
    lines: Tuple[Vector, ...] = field(default=())

    def __post_init__(self) -> None:
        for group, what in ((self.points, "point"), (self.rays, "ray"), (self.lines, "line")):
            for v in group:
                if len(v) != self.dimension:
                    raise DimensionMismatchError(self.dimension, len(v), what)
        points = sorted({as_vector(p) for p in self.points})
        if not points:
            rays, lines = [], []
        else:
            rays = sorted({canonical_direction(as_vector(r)) for r in self.rays if any(r)})
            lines = sorted({canonical_line(as_vector(l)) for l in self.lines if any(l)})
        object.__setattr__(self, "points", tuple(points))
        object.__setattr__(self, "rays", tuple(rays))
        object.__setattr__(self, "lines", tuple(lines))

    @classmethod
    def cone(cls, dimension: int, rays: Iterable[Sequence[Scalar]] = (), lines: Iterable[Sequence[Scalar]] = ()) -> "VPolyhedron":
        """A cone with apex at the origin."""
        origin = tuple(Fraction(0) for _ in range(dimension))
        return cls(dimension, (origin,), tuple(as_vector(r) for r in rays), tuple(as_vector(l) for l in lines))

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lines
