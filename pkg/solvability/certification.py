"""
Checking solution candidates: the finite infimizer property and the classic
and modified solution concepts.
"""
import logging
from typing import List, Optional

from polyhedra import VPolyhedron, contains, h_to_v, v_to_h
from polyhedra.rational import format_vector
from set_optimization import (
    CandidateModeError,
    MembershipError,
    OrderingCone,
    Problem,
    in_domain,
    in_kernel,
    in_recession_domain,
    minkowski_cone,
    natural_cone,
    recession_mapping,
    upper_image,
    value,
)

from .candidate import SolutionCandidate
from .minimality import find_dominator
from .report import ElementVerdict, SolutionVerdict

logger = logging.getLogger(__name__)


def _check_membership(P: Problem, cand: SolutionCandidate) -> None:
    F = P.mapping
    if cand.n != F.n:
        raise MembershipError("point", cand.points[0], f"Candidate lives in dimension {cand.n}, F in {F.n}")
    for x in cand.points:
        if not in_domain(F, x):
            raise MembershipError("point", x)
    for role, group in (("direction", cand.directions), ("kernel direction", cand.kernel_directions)):
        for x in group:
            if not in_recession_domain(F, x):
                raise MembershipError(role, x)


def infimizer_hull(P: Problem, cand: SolutionCandidate) -> VPolyhedron:
    """
    C + conv ⋃ F(x̄) + cone ⋃ G(x̂) in generator form, over S̄ and Ŝ ∪ S̃.

    The conic part is the closed hull: every generator of G(x̂) enters as a ray.
    """
    F, q = P.mapping, P.q
    G = recession_mapping(F)
    cone = P.cone.generators()
    points, rays, lines = [], list(cone.rays), list(cone.lines)
    for x in cand.points:
        v = h_to_v(value(F, x))
        points.extend(v.points)
        rays.extend(v.rays)
        lines.extend(v.lines)
    for x in cand.all_directions:
        v = h_to_v(value(G, x))
        rays.extend(v.points)
        rays.extend(v.rays)
        lines.extend(v.lines)
    return VPolyhedron(q, tuple(points), tuple(rays), tuple(lines))


def is_finite_infimizer(P: Problem, cand: SolutionCandidate, backend: str = "fourier_motzkin") -> bool:
    """
    Whether P ⊆ C + conv ⋃ F(x̄) + cone ⋃ G(x̂) with x̂ ranging over Ŝ ∪ S̃.

    Raises:
        MembershipError: If a point is outside dom F or a direction outside dom G.
    """
    _check_membership(P, cand)
    hull = v_to_h(infimizer_hull(P, cand))
    return contains(hull, h_to_v(upper_image(P, backend)))


def _element_verdicts(P: Problem, cand: SolutionCandidate, relative_to: OrderingCone) -> List[ElementVerdict]:
    verdicts = []
    groups = (("point", cand.points, False), ("direction", cand.directions, True), ("kernel_direction", cand.kernel_directions, True))
    for role, group, homogeneous in groups:
        for x in group:
            dominator = find_dominator(P, x, relative_to, homogeneous=homogeneous)
            verdicts.append(
                ElementVerdict(
                    role=role,
                    element=format_vector(x),
                    minimizing=dominator is None,
                    dominator=None if dominator is None else format_vector(dominator),
                )
            )
    return verdicts


def check_solution(P: Problem, cand: SolutionCandidate, backend: str = "fourier_motzkin") -> SolutionVerdict:
    """
    Classic solution concept: a finite infimizer whose points and directions
    are all minimizers relative to C.

    Raises:
        CandidateModeError: If the candidate has kernel directions or a zero direction.
        MembershipError: If an element lies outside its domain.
    """
    if cand.kernel_directions:
        raise CandidateModeError("Classic solutions have no kernel directions; merge them or use the modified concept")
    if any(not any(x) for x in cand.directions):
        raise CandidateModeError("Directions must be nonzero")
    infimizer = is_finite_infimizer(P, cand, backend)
    elements = _element_verdicts(P, cand, P.cone)
    passed = infimizer and all(e.minimizing for e in elements)
    logger.info("classic check: infimizer=%s passed=%s", infimizer, passed)
    return SolutionVerdict(mode="classic", finite_infimizer=infimizer, elements=elements, passed=passed)


def check_solution_modified(
    P: Problem,
    cand: SolutionCandidate,
    backend: str = "fourier_motzkin",
    natural: Optional[OrderingCone] = None,
) -> SolutionVerdict:
    """
    Modified solution concept: (S̄, Ŝ ∪ S̃) is a finite C-infimizer and every
    element is a minimizer relative to C + K.

    Raises:
        CandidateModeError: If Ŝ meets ker F, S̃ leaves ker F or S̃ contains 0.
        MembershipError: If an element lies outside its domain.
    """
    F = P.mapping
    for x in cand.directions:
        if in_kernel(F, x):
            raise CandidateModeError(f"Direction {format_vector(x)} lies in ker F; list it as a kernel direction")
    for x in cand.kernel_directions:
        if not any(x):
            raise CandidateModeError("Kernel directions must be nonzero")
        if not in_kernel(F, x):
            raise CandidateModeError(f"Kernel direction {format_vector(x)} is outside ker F")
    infimizer = is_finite_infimizer(P, cand, backend)
    enlarged = minkowski_cone(P.cone, natural or natural_cone(F, backend))
    elements = _element_verdicts(P, cand, enlarged)
    passed = infimizer and all(e.minimizing for e in elements)
    logger.info("modified check: infimizer=%s passed=%s", infimizer, passed)
    return SolutionVerdict(mode="modified", finite_infimizer=infimizer, elements=elements, passed=passed)
