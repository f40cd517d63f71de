"""
Constructing solution candidates from the generators of the upper image.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from polyhedra import HPolyhedron, LinearInequality, feasible_point, h_to_v, lp_optimize
from polyhedra.linalg import dot, neg
from polyhedra.rational import Vector, format_vector, unit_vector, zero_vector
from set_optimization import (
    OrderingCone,
    PolyMapping,
    Problem,
    coordinate_names,
    in_kernel,
    is_regular,
    minkowski_cone,
    natural_cone,
    recession_mapping,
    upper_image,
)

from .candidate import SolutionCandidate
from .certification import check_solution, check_solution_modified
from .conditions import NATURAL, require_regular, solvable
from .minimality import find_dominator
from .report import ConeDescription, SolveOutcome

logger = logging.getLogger(__name__)


def _covering_system(F: PolyMapping, cone: OrderingCone, target: Vector) -> HPolyhedron:
    """Rows over (x, w): w ∈ F(x) and target - w ∈ cone."""
    rows = [LinearInequality(a + bb, rhs) for a, bb, rhs in F.rows]
    for c in cone.rows:
        rows.append(LinearInequality(zero_vector(F.n) + neg(c.coefficients), -dot(c.coefficients, target)))
    return HPolyhedron(F.n + F.q, tuple(rows))


def _kernel_rows(F: PolyMapping) -> Tuple[LinearInequality, ...]:
    """Rows over (x, w) for A x ≥ 0."""
    return tuple(LinearInequality(a + zero_vector(F.q), Fraction(0)) for a in F.A)


def _in_cone(cone: OrderingCone, y: Vector) -> bool:
    return all(dot(c.coefficients, y) >= 0 for c in cone.rows)


def lexicographic_witness(system: HPolyhedron, n: int) -> Optional[Vector]:
    """
    The x-part of a point of `system`, minimizing x_1, then x_2, ... in turn.

    Coordinates that are unbounded below are left free.
    """
    for k in range(n):
        outcome = lp_optimize(system, unit_vector(system.dimension, k))
        if outcome.is_infeasible:
            return None
        if outcome.is_optimal:
            e = unit_vector(system.dimension, k)
            system = system.with_rows((LinearInequality(neg(e), -outcome.value),))
    point = feasible_point(system)
    return None if point is None else tuple(point[:n])


def synthesize_infimizer(P: Problem, modified: bool = False, backend: str = "fourier_motzkin") -> SolutionCandidate:
    """
    A finite infimizer read off the generators of the upper image.

    Each vertex v gets a point x with v ∈ F(x) + C. Each ray of the upper image
    outside C, and each line direction outside C, gets a direction x̂ with the ray
    in G(x̂) + C. In modified mode rays inside C + K are covered from ker F, and
    directions inside ker F become kernel directions.

    Raises:
        InfeasibleProblemError: If dom F is empty.
        IrregularConeError: If C is not regular for F.
    """
    require_regular(P, "infimizer synthesis")
    F, C = P.mapping, P.cone
    G = recession_mapping(F)
    generators = h_to_v(upper_image(P, backend))

    points = []
    for v in generators.points:
        x = lexicographic_witness(_covering_system(F, C, v), F.n)
        if x is None:
            raise RuntimeError(f"No x covers vertex {format_vector(v)} of the upper image")
        points.append(x)

    targets = list(generators.rays)
    for line in generators.lines:
        targets.extend((line, neg(line)))
    widened = minkowski_cone(C, natural_cone(F, backend)) if modified else None
    directions = []
    for r in targets:
        if _in_cone(C, r):
            continue
        system = _covering_system(G, C, r)
        if widened is not None and _in_cone(widened, r):
            # G(x̃) + C + K = C + K for x̃ in ker F
            system = system.with_rows(_kernel_rows(F))
        x = lexicographic_witness(system, F.n)
        if x is None or not any(x):
            raise RuntimeError(f"No direction covers ray {format_vector(r)} of the upper image")
        directions.append(x)

    if modified:
        kernel = [x for x in directions if in_kernel(F, x)]
        directions = [x for x in directions if not in_kernel(F, x)]
        candidate = SolutionCandidate(tuple(points), tuple(directions), tuple(kernel))
    else:
        candidate = SolutionCandidate(tuple(points), tuple(directions))
    logger.info(
        "synthesized %d points, %d directions, %d kernel directions",
        len(candidate.points), len(candidate.directions), len(candidate.kernel_directions),
    )
    return candidate


def _reclassify(F: PolyMapping, points, directions, modified: bool) -> SolutionCandidate:
    if not modified:
        return SolutionCandidate(tuple(points), tuple(directions))
    kernel = [x for x in directions if in_kernel(F, x)]
    plain = [x for x in directions if not in_kernel(F, x)]
    return SolutionCandidate(tuple(points), tuple(plain), tuple(kernel))


def refine_candidate(
    P: Problem,
    cand: SolutionCandidate,
    relative_to: Optional[OrderingCone] = None,
    max_rounds: int = 8,
    modified: bool = False,
) -> Tuple[SolutionCandidate, bool]:
    """
    Replace dominated points and directions by their dominators.

    A dominator's value set contains the dominated one, so the infimizer
    property relative to the same cone is kept. Stops when every element is a
    minimizer or after `max_rounds` rounds.

    Returns:
        The refined candidate and whether every element ended up minimal.
    """
    F = P.mapping
    points: List[Vector] = list(cand.points)
    directions: List[Vector] = list(cand.all_directions)
    for round_no in range(max_rounds):
        changed = stuck = False
        for i, x in enumerate(points):
            better = find_dominator(P, x, relative_to)
            if better is not None:
                points[i] = better
                changed = True
        for i, x in enumerate(directions):
            better = find_dominator(P, x, relative_to, homogeneous=True)
            if better is not None and not any(better):
                # only the zero direction dominates x
                stuck = True
                continue
            if better is not None:
                directions[i] = better
                changed = True
        if not changed:
            logger.debug("refinement converged after %d rounds", round_no)
            return _reclassify(F, points, directions, modified), not stuck
    logger.warning("refinement did not converge within %d rounds", max_rounds)
    return _reclassify(F, points, directions, modified), False


def synthesize_solution(
    P: Problem,
    modified: bool = False,
    max_rounds: int = 8,
    backend: str = "fourier_motzkin",
) -> SolveOutcome:
    """
    Synthesize, refine and certify a solution.

    Classic mode needs feasibility and both cone conditions; modified mode needs
    feasibility and the line-free condition only, minimality being judged
    relative to C + K. When a condition fails the outcome lists it and, if
    C ⊇ K is among the failures, suggests C + K with its regularity status.

    Raises:
        IrregularConeError: If C is not regular for F.
    """
    mode = "modified" if modified else "classic"
    verdict = solvable(P, backend)
    failed = list(verdict.failed_conditions)
    if modified:
        failed = [tag for tag in failed if tag != NATURAL]
    if failed:
        outcome = SolveOutcome(mode=mode, solved=False, failed_conditions=failed)
        if NATURAL in verdict.failed_conditions:
            suggested = minkowski_cone(P.cone, natural_cone(P.mapping, backend))
            outcome.suggested_cone = ConeDescription.of(suggested.polyhedron, coordinate_names(P.mapping)[1])
            outcome.suggested_cone_regular = is_regular(suggested, P.mapping)
        return outcome

    relative_to = None
    if modified:
        relative_to = minkowski_cone(P.cone, natural_cone(P.mapping, backend))
    candidate = synthesize_infimizer(P, modified, backend)
    candidate, converged = refine_candidate(P, candidate, relative_to, max_rounds, modified)
    if modified:
        check = check_solution_modified(P, candidate, backend)
    else:
        check = check_solution(P, candidate, backend)
    if not check.passed:
        logger.warning("synthesized candidate failed certification")
    return SolveOutcome(
        mode=mode,
        solved=True,
        certified=check.passed,
        points=[format_vector(x) for x in candidate.points],
        directions=[format_vector(x) for x in candidate.directions],
        kernel_directions=[format_vector(x) for x in candidate.kernel_directions],
        refinement_converged=converged,
        verdict=check,
    )

