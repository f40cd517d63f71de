"""
Solvability conditions for polyhedral set optimization problems.

With C regular for F, (P) has a solution iff it is feasible, −C ∩ Q ⊆ C
(the line-free condition) and C ⊇ K (the natural-cone condition).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from polyhedra import HPolyhedron, LinearInequality, contains, h_to_v, intersect, is_empty, negate
from polyhedra.rational import zero_vector
from set_optimization import (
    IrregularConeError,
    Problem,
    is_feasible,
    is_regular,
    natural_cone,
    regularize,
    require_feasible,
    upper_image_homog,
    vectorial_relaxation,
)

logger = logging.getLogger(__name__)

FEASIBILITY = "feasibility"
LINE_FREE = "line_free"
NATURAL = "natural"


@dataclass(frozen=True)
class Solvability:
    """Verdict of `solvable` with the conditions that failed, in check order."""

    solvable: bool
    failed_conditions: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.solvable


def require_regular(P: Problem, what: str) -> None:
    """
    Raises:
        InfeasibleProblemError: If dom F is empty.
        IrregularConeError: If lin C ⊆ G(0) ⊆ C fails, with G(0) + C suggested.
    """
    require_feasible(P, what)
    if not is_regular(P.cone, P.mapping):
        suggested = regularize(P.cone, P.mapping)
        raise IrregularConeError(
            f"Ordering cone is not regular for F ({what} requires lin C ⊆ G(0) ⊆ C); "
            f"use G(0) + C instead",
            suggested_cone=suggested,
        )


def line_free_holds(P: Problem, backend: str = "fourier_motzkin") -> bool:
    C = P.cone.polyhedron
    overlap = intersect(negate(C), upper_image_homog(P, backend).polyhedron)
    return contains(C, h_to_v(overlap))


def natural_holds(P: Problem, backend: str = "fourier_motzkin") -> bool:
    return P.cone.contains_cone(natural_cone(P.mapping, backend))


def condition_line_free(P: Problem, backend: str = "fourier_motzkin") -> bool:
    """Whether −C ∩ Q ⊆ C."""
    require_regular(P, "the line-free condition")
    return line_free_holds(P, backend)


def condition_natural(P: Problem, backend: str = "fourier_motzkin") -> bool:
    """Whether C ⊇ K."""
    require_regular(P, "the natural-cone condition")
    return natural_holds(P, backend)


def solvable(P: Problem, backend: str = "fourier_motzkin") -> Solvability:
    """
    Decide existence of a solution from the two cone conditions.

    An infeasible problem is unsolvable before regularity is looked at.
    """
    if not is_feasible(P):
        logger.info("problem is infeasible")
        return Solvability(False, (FEASIBILITY,))
    require_regular(P, "the solvability test")
    failed = []
    if not line_free_holds(P, backend):
        failed.append(LINE_FREE)
    if not natural_holds(P, backend):
        failed.append(NATURAL)
    verdict = Solvability(not failed, tuple(failed))
    logger.info("solvable=%s failed=%s", verdict.solvable, ",".join(failed) or "-")
    return verdict


def _oracle_system(P: Problem, violated: LinearInequality) -> HPolyhedron:
    """
    Rows over (x, y1, g, d) for: A x + B y1 ≥ 0, -y1 ∈ C, A x + B g ≥ 0, d ∈ C
    and violated·(g + d) ≤ -1.
    """
    F, C = P.mapping, P.cone
    n, q = F.n, F.q
    zq = zero_vector(q)
    rows = []
    for a, bb, _ in F.rows:
        rows.append(LinearInequality(a + bb + zq + zq, Fraction(0)))
        rows.append(LinearInequality(a + zq + bb + zq, Fraction(0)))
    for c in C.rows:
        minus_c = tuple(-v for v in c.coefficients)
        rows.append(LinearInequality(zero_vector(n) + minus_c + zq + zq, Fraction(0)))
        rows.append(LinearInequality(zero_vector(n) + zq + zq + c.coefficients, Fraction(0)))
    minus_v = tuple(-v for v in violated.coefficients)
    rows.append(LinearInequality(zero_vector(n) + zq + minus_v + minus_v, Fraction(1)))
    return HPolyhedron(n + 3 * q, tuple(rows))


def solvable_oracle(P: Problem) -> bool:
    """
    Decide existence of a solution directly: (P) is solvable iff no x has
    G(x) + C ⊋ C.

    G(x) + C ⊇ C holds iff some y1 ∈ G(x) has -y1 ∈ C; the inclusion is strict
    iff some g + d with g ∈ G(x), d ∈ C violates a row of C. Each row of C gives
    one homogeneous feasibility problem. Works on the rows of C as given, so no
    projection is involved.
    """
    require_regular(P, "the solvability oracle")
    for row in P.cone.rows:
        if not is_empty(_oracle_system(P, row)):
            logger.debug("oracle found G(x) + C ⊋ C violating %s", row.coefficients)
            return False
    return True


def vr_solvable(P: Problem, backend: str = "fourier_motzkin") -> bool:
    """Whether the vectorial relaxation has a solution, i.e. −C ∩ Q ⊆ C."""
    return condition_line_free(P, backend)


def vr_solvable_via_relaxation(P: Problem, backend: str = "fourier_motzkin") -> bool:
    """The same verdict obtained by running `solvable` on the relaxed problem."""
    require_regular(P, "the relaxation verdict")
    relaxed = Problem(vectorial_relaxation(P.mapping), P.cone)
    return solvable(relaxed, backend).solvable
