"""
Polyhedral convex set-valued mappings F: ℝⁿ ⇉ ℝ^q.

A mapping is stored only through the H-representation of its graph,
gr F = {(x, y) : A x + B y ≥ b}; every derived set is computed from it.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from polyhedra import HPolyhedron, LinearInequality, is_empty, project
from polyhedra.exceptions import DimensionMismatchError
from polyhedra.linalg import dot
from polyhedra.rational import Scalar, Vector, as_vector, zero_vector

from .exceptions import EmptyGraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyMapping:
    """
    Set-valued mapping with graph {(x, y) ∈ ℝⁿ × ℝ^q : A x + B y ≥ b}.

    Attributes:
        n: Dimension of the pre-image space.
        q: Dimension of the image space.
        A: m rows of length n.
        B: m rows of length q.
        b: Right-hand side of length m.
    """

    n: int
    q: int
    A: Tuple[Vector, ...]
    B: Tuple[Vector, ...]
    b: Vector

    def __post_init__(self) -> None:
        if self.n < 1 or self.q < 1:
            raise ValueError(f"Dimensions must be positive, got n={self.n}, q={self.q}")
        A = tuple(as_vector(row) for row in self.A)
        B = tuple(as_vector(row) for row in self.B)
        b = as_vector(self.b)
        if not len(A) == len(B) == len(b):
            raise ValueError(f"Row counts differ: A has {len(A)}, B has {len(B)}, b has {len(b)}")
        for row in A:
            if len(row) != self.n:
                raise DimensionMismatchError(self.n, len(row), "row of A")
        for row in B:
            if len(row) != self.q:
                raise DimensionMismatchError(self.q, len(row), "row of B")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_rows(cls, n: int, q: int, rows: Iterable[Sequence[Scalar]]) -> "PolyMapping":
        """
        Build from rows of n + q + 1 numbers: the A-part, the B-part, then the rhs.
        """
        A, B, b = [], [], []
        for row in rows:
            row = as_vector(row)
            if len(row) != n + q + 1:
                raise DimensionMismatchError(n + q + 1, len(row), "graph row")
            A.append(row[:n])
            B.append(row[n:n + q])
            b.append(row[n + q])
        return cls(n, q, tuple(A), tuple(B), tuple(b))

    @classmethod
    def from_graph(cls, n: int, q: int, graph: HPolyhedron) -> "PolyMapping":
        if graph.dimension != n + q:
            raise DimensionMismatchError(n + q, graph.dimension, "graph")
        return cls.from_rows(n, q, (row.coefficients + (row.rhs,) for row in graph.inequalities))

    @property
    def rows(self) -> Tuple[Tuple[Vector, Vector, Fraction], ...]:
        return tuple(zip(self.A, self.B, self.b))

    @property
    def graph(self) -> HPolyhedron:
        return HPolyhedron(
            self.n + self.q,
            tuple(LinearInequality(a + bb, rhs) for a, bb, rhs in self.rows),
        )

    @property
    def x_coordinates(self) -> Tuple[int, ...]:
        return tuple(range(self.n))

    @property
    def y_coordinates(self) -> Tuple[int, ...]:
        return tuple(range(self.n, self.n + self.q))


def require_nonempty_graph(F: PolyMapping, what: str) -> None:
    if is_empty(F.graph):
        raise EmptyGraphError(what)


def recession_mapping(F: PolyMapping) -> PolyMapping:
    """
    The mapping G with gr G = 0⁺ gr F: the same A and B with b = 0.

    Raises:
        EmptyGraphError: If gr F is empty.
    """
    require_nonempty_graph(F, "the recession mapping")
    return PolyMapping(F.n, F.q, F.A, F.B, zero_vector(len(F.b)))


def value(F: PolyMapping, x: Sequence[Scalar]) -> HPolyhedron:
    """F(x) = {y : B y ≥ b - A x}; empty exactly when x ∉ dom F."""
    x = as_vector(x)
    if len(x) != F.n:
        raise DimensionMismatchError(F.n, len(x), "argument x")
    return HPolyhedron(F.q, tuple(LinearInequality(bb, rhs - dot(a, x)) for a, bb, rhs in F.rows))


def domain(F: PolyMapping, backend: str = "fourier_motzkin") -> HPolyhedron:
    """dom F: the projection of gr F onto the x-coordinates."""
    return project(F.graph, F.x_coordinates, backend=backend)


def in_domain(F: PolyMapping, x: Sequence[Scalar]) -> bool:
    return not is_empty(value(F, x))


def in_recession_domain(F: PolyMapping, x: Sequence[Scalar]) -> bool:
    """Whether x ∈ dom G for the recession mapping G of F."""
    return in_domain(recession_mapping(F), x)


def in_kernel(F: PolyMapping, x: Sequence[Scalar]) -> bool:
    """Whether 0 ∈ G(x), i.e. A x ≥ 0."""
    x = as_vector(x)
    if len(x) != F.n:
        raise DimensionMismatchError(F.n, len(x), "argument x")
    return all(dot(a, x) >= 0 for a in F.A)


def coordinate_names(F: PolyMapping) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    xs = tuple(f"x{i + 1}" for i in range(F.n))
    ys = tuple(f"y{i + 1}" for i in range(F.q))
    return xs, ys


def zero_of(F: PolyMapping) -> Vector:
    return zero_vector(F.n)
