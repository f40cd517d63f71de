"""
The problem (P): minimize F(x) + C over x ∈ ℝⁿ, its upper images and the
mappings derived from it.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from polyhedra import (
    HPolyhedron,
    LinearInequality,
    h_to_v,
    is_empty,
    minkowski_sum,
    project,
    v_to_h,
)
from polyhedra.exceptions import DimensionMismatchError
from polyhedra.linalg import dot
from polyhedra.rational import Scalar, as_vector, zero_vector

from .cones import OrderingCone
from .exceptions import InfeasibleProblemError
from .mapping import PolyMapping, recession_mapping

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Problem:
    """
    Polyhedral convex set optimization problem min F(x) + C.

    Regularity of the cone is not enforced here; verdict operations check it.
    """

    mapping: PolyMapping
    cone: OrderingCone

    def __post_init__(self) -> None:
        if self.cone.q != self.mapping.q:
            raise DimensionMismatchError(self.mapping.q, self.cone.q, "ordering cone")

    @property
    def n(self) -> int:
        return self.mapping.n

    @property
    def q(self) -> int:
        return self.mapping.q

    def with_cone(self, cone: OrderingCone) -> "Problem":
        return Problem(self.mapping, cone)


def is_feasible(P: Problem) -> bool:
    """Whether dom F ≠ ∅, which is the same as gr F ≠ ∅."""
    return not is_empty(P.mapping.graph)


def require_feasible(P: Problem, what: str) -> None:
    if not is_feasible(P):
        raise InfeasibleProblemError(what)


def _image_plus_cone(graph: HPolyhedron, F: PolyMapping, C: OrderingCone, backend: str) -> HPolyhedron:
    image = h_to_v(project(graph, F.y_coordinates, backend=backend))
    return v_to_h(minkowski_sum(image, C.generators()))


def upper_image(P: Problem, backend: str = "fourier_motzkin") -> HPolyhedron:
    """
    P = C + ⋃ₓ F(x), as an irredundant H-representation.

    Raises:
        InfeasibleProblemError: If dom F is empty.
    """
    require_feasible(P, "the upper image")
    return _image_plus_cone(P.mapping.graph, P.mapping, P.cone, backend)


def upper_image_homog(P: Problem, backend: str = "fourier_motzkin") -> OrderingCone:
    """
    Q = C + ⋃ₓ G(x), the recession cone of the upper image.

    Raises:
        InfeasibleProblemError: If dom F is empty.
    """
    require_feasible(P, "the homogeneous upper image")
    G = recession_mapping(P.mapping)
    return OrderingCone.from_polyhedron(_image_plus_cone(G.graph, G, P.cone, backend))


def is_bounded(P: Problem, backend: str = "fourier_motzkin") -> bool:
    """Whether Q ⊆ C, i.e. no direction of the upper image leaves the cone."""
    return P.cone.contains_cone(upper_image_homog(P, backend))


def augment_with_cone(F: PolyMapping, C: OrderingCone, backend: str = "fourier_motzkin") -> PolyMapping:
    """
    F_C(x) = F(x) + C.

    The cone element c is added as slack coordinates, giving the lifted system
    A x + B y - B c ≥ b, c ∈ C over (x, y, c), which is projected back onto (x, y).
    """
    if C.q != F.q:
        raise DimensionMismatchError(F.q, C.q, "ordering cone")
    zx, zy = zero_vector(F.n), zero_vector(F.q)
    rows = [LinearInequality(a + bb + tuple(-v for v in bb), rhs) for a, bb, rhs in F.rows]
    rows += [LinearInequality(zx + zy + row.coefficients, Fraction(0)) for row in C.rows]
    lifted = HPolyhedron(F.n + 2 * F.q, tuple(rows))
    graph = project(lifted, tuple(range(F.n + F.q)), backend=backend)
    if graph.is_trivially_empty:
        return F
    return PolyMapping.from_graph(F.n, F.q, graph)


def from_vlp(M: Sequence[Sequence[Scalar]], A: Sequence[Sequence[Scalar]], b: Sequence[Scalar], C: OrderingCone) -> Problem:
    """
    Embed the vector linear program min_C M x s.t. A x ≥ b.

    The objective is F(x) = {M x} + C when A x ≥ b and ∅ otherwise; its graph
    has the rows A x ≥ b and c·(y - M x) ≥ 0 for every row c of C.
    """
    M = tuple(as_vector(row) for row in M)
    if not M:
        raise ValueError("Objective matrix M must have at least one row")
    q, n = len(M), len(M[0])
    if C.q != q:
        raise DimensionMismatchError(q, C.q, "ordering cone")
    A = tuple(as_vector(row) for row in A)
    b = as_vector(b)
    if len(A) != len(b):
        raise ValueError(f"Constraint rows differ: A has {len(A)}, b has {len(b)}")
    for row in M + A:
        if len(row) != n:
            raise DimensionMismatchError(n, len(row), "row of M or A")
    rows = [a + zero_vector(q) + (rhs,) for a, rhs in zip(A, b)]
    for cone_row in C.rows:
        c = cone_row.coefficients
        minus_cm = tuple(-dot(c, tuple(M[k][j] for k in range(q))) for j in range(n))
        rows.append(minus_cm + c + (Fraction(0),))
    logger.debug("VLP embedding with %d graph rows", len(rows))
    return Problem(PolyMapping.from_rows(n, q, rows), C)

