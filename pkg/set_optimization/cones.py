"""
Ordering cones and the cones derived from a mapping: G(0), G(ℝⁿ), the natural
ordering cone K and the algebraic kernel ker F.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from polyhedra import (
    HPolyhedron,
    LinearInequality,
    VPolyhedron,
    contains,
    h_to_v,
    lineality_space,
    minkowski_sum,
    project,
    remove_redundant,
    v_to_h,
)
from polyhedra.exceptions import DimensionMismatchError
from polyhedra.rational import Scalar, as_vector, unit_vector

from .mapping import PolyMapping, recession_mapping, require_nonempty_graph, value, zero_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderingCone:
    """
    Polyhedral convex cone {y ∈ ℝ^q : c·y ≥ 0 for every row}.
    """

    q: int
    rows: Tuple[LinearInequality, ...] = ()

    def __post_init__(self) -> None:
        for row in self.rows:
            if row.dimension != self.q:
                raise DimensionMismatchError(self.q, row.dimension, "cone row")
            if row.rhs != 0:
                raise ValueError(f"Cone rows must be homogeneous, got right-hand side {row.rhs}")
        object.__setattr__(self, "rows", HPolyhedron(self.q, tuple(self.rows)).inequalities)

    @classmethod
    def from_rows(cls, q: int, rows: Iterable[Sequence[Scalar]]) -> "OrderingCone":
        return cls(q, tuple(LinearInequality(as_vector(r), Fraction(0)) for r in rows))

    @classmethod
    def from_polyhedron(cls, p: HPolyhedron) -> "OrderingCone":
        if not p.is_homogeneous:
            raise ValueError("Only homogeneous systems describe cones")
        return cls(p.dimension, p.inequalities)

    @classmethod
    def nonnegative_orthant(cls, q: int) -> "OrderingCone":
        return cls.from_rows(q, (unit_vector(q, i) for i in range(q)))

    @classmethod
    def full_space(cls, q: int) -> "OrderingCone":
        return cls(q, ())

    @classmethod
    def trivial(cls, q: int) -> "OrderingCone":
        return cls.from_polyhedron(HPolyhedron.origin(q))

    @property
    def polyhedron(self) -> HPolyhedron:
        return HPolyhedron(self.q, self.rows)

    def generators(self) -> VPolyhedron:
        return h_to_v(self.polyhedron)

    def minimized(self) -> "OrderingCone":
        return OrderingCone.from_polyhedron(remove_redundant(self.polyhedron))

    def negated(self) -> "OrderingCone":
        return OrderingCone(self.q, tuple(LinearInequality(tuple(-c for c in r.coefficients), Fraction(0)) for r in self.rows))

    def contains_cone(self, other: "OrderingCone") -> bool:
        return contains(self.polyhedron, other.generators())

    def same_as(self, other: "OrderingCone") -> bool:
        return self.contains_cone(other) and other.contains_cone(self)


def minkowski_cone(first: OrderingCone, second: OrderingCone) -> OrderingCone:
    """The cone first + second."""
    if first.q != second.q:
        raise DimensionMismatchError(first.q, second.q, "cone")
    total = minkowski_sum(first.generators(), second.generators())
    return OrderingCone.from_polyhedron(v_to_h(total))


def g_zero(F: PolyMapping) -> OrderingCone:
    """
    G(0), the common recession cone of the nonempty values F(x).

    Raises:
        EmptyGraphError: If gr F is empty.
    """
    G = recession_mapping(F)
    return OrderingCone.from_polyhedron(remove_redundant(value(G, zero_of(F))))


def image_cone(F: PolyMapping, backend: str = "fourier_motzkin") -> OrderingCone:
    """
    G(ℝⁿ) = ⋃ₓ G(x), the projection of gr G onto the y-coordinates.

    Raises:
        EmptyGraphError: If gr F is empty.
    """
    G = recession_mapping(F)
    return OrderingCone.from_polyhedron(project(G.graph, G.y_coordinates, backend=backend))


def _kernel_rows(F: PolyMapping) -> Tuple[LinearInequality, ...]:
    zeros = tuple(Fraction(0) for _ in range(F.q))
    return tuple(LinearInequality(a + zeros, Fraction(0)) for a in F.A)


def natural_cone(F: PolyMapping, backend: str = "fourier_motzkin") -> OrderingCone:
    """
    Natural ordering cone K = {y : ∃x, y ∈ G(x), 0 ∈ G(x)}.

    Computed as the projection of {(x, y) : A x + B y ≥ 0, A x ≥ 0} onto y.

    Raises:
        EmptyGraphError: If gr F is empty.
    """
    G = recession_mapping(F)
    system = G.graph.with_rows(_kernel_rows(F))
    cone = OrderingCone.from_polyhedron(project(system, G.y_coordinates, backend=backend))
    logger.debug("natural cone has %d rows", len(cone.rows))
    return cone


def kernel_image(F: PolyMapping) -> OrderingCone:
    """
    G[ker F], the union of G(x) over the algebraic kernel, computed through
    the generators of gr G restricted to ker F × ℝ^q.
    """
    G = recession_mapping(F)
    system = G.graph.with_rows(_kernel_rows(F))
    return OrderingCone.from_polyhedron(project(system, G.y_coordinates, backend="double_description"))


def algebraic_kernel(F: PolyMapping) -> HPolyhedron:
    """
    ker F = {x : 0 ∈ G(x)} = {x : A x ≥ 0}, a polyhedral convex cone in ℝⁿ.

    Raises:
        EmptyGraphError: If gr F is empty.
    """
    require_nonempty_graph(F, "the algebraic kernel")
    return remove_redundant(HPolyhedron(F.n, tuple(LinearInequality(a, Fraction(0)) for a in F.A)))


def is_regular(C: OrderingCone, F: PolyMapping) -> bool:
    """
    Whether lin C ⊆ G(0) ⊆ C.

    Raises:
        EmptyGraphError: If gr F is empty.
    """
    if C.q != F.q:
        raise DimensionMismatchError(F.q, C.q, "ordering cone")
    G0 = g_zero(F)
    return contains(G0.polyhedron, lineality_space(C.polyhedron)) and C.contains_cone(G0)


def regularize(C: OrderingCone, F: PolyMapping) -> OrderingCone:
    """
    G(0) + C; replacing C by it leaves the problem unchanged and the result is
    regular for F_C.
    """
    return minkowski_cone(g_zero(F), C)
