"""
Vectorial relaxation of a polyhedral set optimization problem.
"""
import logging
from fractions import Fraction

from polyhedra.rational import zero_vector

from .mapping import PolyMapping, require_nonempty_graph

logger = logging.getLogger(__name__)


def vectorial_relaxation(F: PolyMapping) -> PolyMapping:
    """
    F̂: ℝ^(n+q) ⇉ ℝ^q with F̂(x, u) = {u} + G(0) if u ∈ F(x) and ∅ otherwise.

    The graph over (x, u, y) has the rows B y - B u ≥ 0, encoding (0, y - u) ∈ gr G,
    and A x + B u ≥ b, encoding (x, u) ∈ gr F.

    Raises:
        EmptyGraphError: If gr F is empty.
    """
    require_nonempty_graph(F, "the vectorial relaxation")
    zx, zy = zero_vector(F.n), zero_vector(F.q)
    rows = []
    for a, bb, rhs in F.rows:
        rows.append(zx + tuple(-v for v in bb) + bb + (Fraction(0),))
        rows.append(a + bb + zy + (rhs,))
    relaxed = PolyMapping.from_rows(F.n + F.q, F.q, rows)
    logger.debug("vectorial relaxation: n=%d, q=%d, %d rows", relaxed.n, relaxed.q, len(rows))
    return relaxed
