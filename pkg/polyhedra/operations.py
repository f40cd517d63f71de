"""
Set-algebraic operations and predicates on exact polyhedra.

Verdicts are decided by exact row evaluation or exact LP optima; nothing here
samples or rounds.
"""
import logging
from typing import Sequence

from .double_description import h_to_v, inequality_matrix, lineality_basis, matrix_rows, reduce_generators, v_to_h
from .exceptions import DimensionMismatchError, EmptyPolyhedronError
from .linalg import add, dot, neg
from .simplex import lp_optimize
from .types import HPolyhedron, LinearInequality, VPolyhedron

logger = logging.getLogger(__name__)


def _same_dimension(a, b) -> None:
    if a.dimension != b.dimension:
        raise DimensionMismatchError(a.dimension, b.dimension)


def is_empty(p: HPolyhedron) -> bool:
    """True iff no point satisfies every row (phase-one LP)."""
    if p.is_trivially_empty:
        return True
    if not p.inequalities or p.is_homogeneous:
        return False
    return lp_optimize(p, [0] * p.dimension).is_infeasible


def remove_redundant(p: HPolyhedron) -> HPolyhedron:
    """
    Drop every row implied by the remaining ones.

    cddlib's canonicalization also detects implicit equations; each comes back
    as a pair of opposite rows. An empty polyhedron comes back as the canonical
    system `0 ≥ 1`.
    """
    if is_empty(p):
        return HPolyhedron.empty(p.dimension)
    if not p.inequalities:
        return p
    matrix = inequality_matrix(p)
    matrix.canonicalize()
    ordinary, linear = matrix_rows(matrix)
    rows = [LinearInequality(r[1:], -r[0]) for r in ordinary]
    for r in linear:
        rows.append(LinearInequality(r[1:], -r[0]))
        rows.append(LinearInequality(neg(r[1:]), r[0]))
    logger.debug("remove_redundant: %d of %d rows kept", len(rows), len(p.inequalities))
    return HPolyhedron(p.dimension, tuple(rows))


def contains(outer: HPolyhedron, inner: VPolyhedron) -> bool:
    """
    Whether the set of `inner` lies in `outer`.

    Points must satisfy every row, rays the homogeneous part of every row and
    lines that part with equality.
    """
    _same_dimension(outer, inner)
    if inner.is_empty:
        return True
    for point in inner.points:
        if not outer.contains_point(point):
            return False
    for row in outer.inequalities:
        for ray in inner.rays:
            if dot(row.coefficients, ray) < 0:
                return False
        for line in inner.lines:
            if dot(row.coefficients, line) != 0:
                return False
    return True


def set_equal(a: HPolyhedron, b: HPolyhedron) -> bool:
    _same_dimension(a, b)
    return contains(a, h_to_v(b)) and contains(b, h_to_v(a))


def strictly_contains(outer: HPolyhedron, inner: HPolyhedron) -> bool:
    """
    Whether outer ⊋ inner.

    Containment is checked on the generators of `inner`; strictness holds when
    some row (h, β) of `inner` has inf{h·z : z ∈ outer} < β or unbounded below.
    """
    _same_dimension(outer, inner)
    if is_empty(inner):
        return not is_empty(outer)
    if not contains(outer, h_to_v(inner)):
        return False
    for row in remove_redundant(inner).inequalities:
        outcome = lp_optimize(outer, row.coefficients)
        if outcome.is_unbounded or (outcome.is_optimal and outcome.value < row.rhs):
            return True
    return False


def lineality_space(p: HPolyhedron) -> VPolyhedron:
    """
    Lineality space of a nonempty polyhedron as a V-polyhedron made of lines only.

    Raises:
        EmptyPolyhedronError: If `p` is empty.
    """
    if is_empty(p):
        raise EmptyPolyhedronError("Lineality space of the empty set is not defined")
    return VPolyhedron.cone(p.dimension, lines=lineality_basis(p))


def recession_cone(p: HPolyhedron) -> HPolyhedron:
    """
    Recession cone: the same rows with right-hand side zero.

    Raises:
        EmptyPolyhedronError: If `p` is empty.
    """
    if is_empty(p):
        raise EmptyPolyhedronError("Recession cone of the empty set is not defined")
    return HPolyhedron(p.dimension, tuple(row.homogeneous() for row in p.inequalities))


def minkowski_sum(a: VPolyhedron, b: VPolyhedron) -> VPolyhedron:
    """
    Minkowski sum of two nonempty V-polyhedra, reduced to minimal generators.

    Raises:
        EmptyPolyhedronError: If either operand is empty.
    """
    _same_dimension(a, b)
    if a.is_empty or b.is_empty:
        raise EmptyPolyhedronError("Minkowski sum with an empty operand")
    points = tuple(add(p, q) for p in a.points for q in b.points)
    total = VPolyhedron(a.dimension, points, a.rays + b.rays, a.lines + b.lines)
    return reduce_generators(total)


def conic_hull(generators: Sequence[VPolyhedron], dimension: int) -> HPolyhedron:
    """
    Closed conic hull of the union of the given sets.

    Points and rays of every nonempty input become rays, lines stay lines. The
    hull of nothing is {0}.
    """
    rays, lines = [], []
    for v in generators:
        if v.dimension != dimension:
            raise DimensionMismatchError(dimension, v.dimension, "generator set")
        if v.is_empty:
            continue
        rays.extend(v.points)
        rays.extend(v.rays)
        lines.extend(v.lines)
    if not rays and not lines:
        return HPolyhedron.origin(dimension)
    return v_to_h(VPolyhedron.cone(dimension, rays, lines))


def intersect(a: HPolyhedron, b: HPolyhedron) -> HPolyhedron:
    _same_dimension(a, b)
    return remove_redundant(a.with_rows(b.inequalities))


def negate(p: HPolyhedron) -> HPolyhedron:
    """The reflected set -p."""
    return HPolyhedron(
        p.dimension,
        tuple(LinearInequality(tuple(-c for c in row.coefficients), row.rhs) for row in p.inequalities),
    )
