"""
Exact H <-> V conversion through cddlib's double description method.

cdd matrices are built in fraction mode, so every coefficient stays a
`fractions.Fraction`. A row (b, a) of an inequality matrix means b + a·z ≥ 0;
a generator row (t, v) is a point when t = 1 and a ray when t = 0, with lines
listed in the linearity set.

cddlib returns minimal generator and facet lists, but the lineality part is
only fixed up to a change of basis. The output is therefore reduced modulo the
lineality space (or the affine hull) so that equal sets give equal objects.
"""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import cdd

from .linalg import neg, nullspace, orthogonal_basis, project_off, rref
from .rational import Vector, canonical_direction, canonical_line
from .types import HPolyhedron, LinearInequality, VPolyhedron

logger = logging.getLogger(__name__)

NUMBER_TYPE = 'fraction'


def inequality_matrix(p: HPolyhedron) -> "cdd.Matrix":
    """cdd H-matrix of `p`; the universe gets the single row 1 ≥ 0."""
    rows = [(-row.rhs,) + tuple(row.coefficients) for row in p.inequalities]
    if not rows:
        rows = [(Fraction(1),) + (Fraction(0),) * p.dimension]
    matrix = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    matrix.rep_type = cdd.RepType.INEQUALITY
    return matrix


def generator_matrix(v: VPolyhedron) -> "cdd.Matrix":
    """cdd V-matrix of a nonempty `v`."""
    rows = [(Fraction(1),) + tuple(p) for p in v.points]
    rows += [(Fraction(0),) + tuple(r) for r in v.rays]
    matrix = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    if v.lines:
        matrix.extend([(Fraction(0),) + tuple(l) for l in v.lines], linear=True)
    matrix.rep_type = cdd.RepType.GENERATOR
    return matrix


def matrix_rows(matrix: "cdd.Matrix") -> Tuple[List[Vector], List[Vector]]:
    """(ordinary rows, linearity rows) of a cdd matrix as Fraction tuples."""
    ordinary, linear = [], []
    for i in range(matrix.row_size):
        row = tuple(Fraction(x) for x in matrix[i])
        (linear if i in matrix.lin_set else ordinary).append(row)
    return ordinary, linear


def _canonical_lines(lines: Sequence[Vector], dimension: int) -> List[Vector]:
    return [canonical_line(row) for row in rref(lines, dimension)]


def h_to_v(p: HPolyhedron) -> VPolyhedron:
    """
    Generator form of an H-polyhedron.

    Points and rays are reduced modulo the lineality space, which makes the
    output the unique minimal V-representation.
    """
    d = p.dimension
    if p.is_trivially_empty:
        return VPolyhedron(d)
    generators, lines = matrix_rows(cdd.Polyhedron(inequality_matrix(p)).get_generators())
    if not any(g[0] != 0 for g in generators):
        return VPolyhedron(d)

    lineality = _canonical_lines([l[1:] for l in lines], d)
    orthogonal = orthogonal_basis(lineality)
    points, rays = [], []
    for g in generators:
        t = g[0]
        if t != 0:
            points.append(project_off(tuple(x / t for x in g[1:]), orthogonal))
        else:
            rays.append(canonical_direction(project_off(g[1:], orthogonal)))
    logger.debug("h_to_v: %d points, %d rays, %d lines", len(points), len(rays), len(lineality))
    return VPolyhedron(d, tuple(points), tuple(rays), tuple(lineality))


def v_to_h(v: VPolyhedron) -> HPolyhedron:
    """
    Irredundant H-representation of a V-polyhedron.

    Equations of the affine hull are emitted as pairs of opposite rows; facet
    rows are reduced modulo those equations.
    """
    d = v.dimension
    if v.is_empty:
        return HPolyhedron.empty(d)
    facets, equations = matrix_rows(cdd.Polyhedron(generator_matrix(v)).get_inequalities())

    # rows as (a, -β) so that a·z ≥ β
    equations = _canonical_lines([e[1:] + (e[0],) for e in equations], d + 1)
    orthogonal = orthogonal_basis(equations)
    rows = []
    for f in facets:
        if not any(f[1:]):
            continue
        w = project_off(f[1:] + (f[0],), orthogonal)
        rows.append(LinearInequality(w[:d], -w[d]))
    for w in equations:
        rows.append(LinearInequality(w[:d], -w[d]))
        rows.append(LinearInequality(neg(w[:d]), w[d]))
    logger.debug("v_to_h: %d facets, %d equations", len(facets), len(equations))
    return HPolyhedron(d, tuple(rows))


def lineality_basis(p: HPolyhedron) -> List[Vector]:
    """Canonical basis of {z : a·z = 0 for every row of p}."""
    return _canonical_lines(nullspace([row.coefficients for row in p.inequalities], p.dimension), p.dimension)


def reduce_generators(v: VPolyhedron) -> VPolyhedron:
    """Minimal generator set of the polyhedron represented by `v`."""
    return h_to_v(v_to_h(v))
