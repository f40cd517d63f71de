"""
Minimizing points and directions.

x̄ is a minimizer relative to a cone C' when no x gives F(x) + C' ⊋ F(x̄) + C'
(G in place of F for directions). Domination is decided with one LP per facet
of F(x̄) + C'.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from polyhedra import (
    HPolyhedron,
    LinearInequality,
    VPolyhedron,
    contains,
    feasible_point,
    h_to_v,
    lp_optimize,
    minkowski_sum,
    strictly_contains,
    v_to_h,
)
from polyhedra.linalg import add, dot
from polyhedra.rational import Scalar, Vector, as_vector, format_vector, zero_vector
from set_optimization import (
    MembershipError,
    OrderingCone,
    PolyMapping,
    Problem,
    g_zero,
    in_domain,
    in_kernel,
    minkowski_cone,
    recession_mapping,
    value,
)

from .conditions import require_regular

logger = logging.getLogger(__name__)


def value_plus_cone(F: PolyMapping, x: Sequence[Fraction], cone: OrderingCone) -> VPolyhedron:
    """F(x) + cone in generator form; F(x) must be nonempty."""
    return minkowski_sum(h_to_v(value(F, x)), cone.generators())


def _check_recession(F: PolyMapping, target: VPolyhedron, cone: OrderingCone) -> None:
    expected = minkowski_cone(g_zero(F), cone)
    actual = OrderingCone.from_polyhedron(v_to_h(VPolyhedron.cone(target.dimension, target.rays, target.lines)))
    if not actual.same_as(expected):
        raise RuntimeError("Recession cone of F(x) + C differs from G(0) + C")


def _dominance_system(F: PolyMapping, vertices: Sequence[Vector], cone: OrderingCone) -> HPolyhedron:
    """
    Rows over (x, w_1..w_J, g, d): each vertex v_j lies in F(x) + cone through
    w_j ∈ F(x), and g ∈ F(x), d ∈ cone.
    """
    n, q, J = F.n, F.q, len(vertices)
    width = n + q * (J + 2)

    def embed(x_part, blocks) -> Vector:
        z = list(x_part) if x_part is not None else [Fraction(0)] * n
        for k in range(J + 2):
            z.extend(blocks.get(k, zero_vector(q)))
        return tuple(z)

    rows: List[LinearInequality] = []
    for j, v in enumerate(vertices):
        for a, bb, rhs in F.rows:
            rows.append(LinearInequality(embed(a, {j: bb}), rhs))
        for c in cone.rows:
            minus_c = tuple(-t for t in c.coefficients)
            rows.append(LinearInequality(embed(None, {j: minus_c}), -dot(c.coefficients, v)))
    for a, bb, rhs in F.rows:
        rows.append(LinearInequality(embed(a, {J: bb}), rhs))
    for c in cone.rows:
        rows.append(LinearInequality(embed(None, {J + 1: c.coefficients}), Fraction(0)))
    return HPolyhedron(width, tuple(rows))


def _facet_objective(F: PolyMapping, J: int, h: Vector) -> Vector:
    return zero_vector(F.n + F.q * J) + h + h


def find_dominator(
    P: Problem,
    x_bar: Sequence[Scalar],
    relative_to: Optional[OrderingCone] = None,
    homogeneous: bool = False,
) -> Optional[Vector]:
    """
    Find x with F(x) + C' ⊋ F(x̄) + C', or G(x) + C' ⊋ G(x̄) + C' when
    `homogeneous` is set.

    Args:
        P: The problem; its cone is used when `relative_to` is None.
        x_bar: The point (or direction) under test.
        relative_to: The cone C'.
        homogeneous: Compare values of the recession mapping G.

    Returns:
        A dominating x, or None when x̄ is a minimizer.

    Raises:
        MembershipError: If x̄ ∉ dom F (dom G when homogeneous).
    """
    cone = relative_to or P.cone
    F = recession_mapping(P.mapping) if homogeneous else P.mapping
    x_bar = as_vector(x_bar)
    role = "direction" if homogeneous else "point"
    current = value(F, x_bar)
    target_v = h_to_v(current)
    if target_v.is_empty:
        raise MembershipError(role, x_bar, f"{role} {format_vector(x_bar)} is outside the domain of {'G' if homogeneous else 'F'}")
    target_v = minkowski_sum(target_v, cone.generators())
    _check_recession(F, target_v, cone)
    target = v_to_h(target_v)

    vertices = target_v.points
    system = _dominance_system(F, vertices, cone)
    J = len(vertices)
    for facet in target.inequalities:
        objective = _facet_objective(F, J, facet.coefficients)
        outcome = lp_optimize(system, objective)
        if outcome.is_infeasible:
            raise RuntimeError(f"Dominance system infeasible although {role} {format_vector(x_bar)} satisfies it")
        if outcome.is_optimal and outcome.value >= facet.rhs:
            continue
        if outcome.is_optimal:
            witness = outcome.witness
        else:
            below = LinearInequality(tuple(-t for t in objective), 1 - facet.rhs)
            witness = feasible_point(system.with_rows((below,)))
        logger.debug("%s %s dominated through facet %s", role, format_vector(x_bar), format_vector(facet.coefficients))
        return tuple(witness[:F.n])
    return None


def is_minimizing_point(P: Problem, x_bar: Sequence[Scalar], relative_to: Optional[OrderingCone] = None) -> bool:
    """
    Raises:
        MembershipError: If x̄ ∉ dom F.
    """
    return find_dominator(P, x_bar, relative_to) is None


def is_minimizing_direction(P: Problem, x_hat: Sequence[Scalar], relative_to: Optional[OrderingCone] = None) -> bool:
    """
    Raises:
        MembershipError: If x̂ = 0 or x̂ ∉ dom G.
    """
    x_hat = as_vector(x_hat)
    if not any(x_hat):
        raise MembershipError("direction", x_hat, "Minimizing directions must be nonzero")
    return find_dominator(P, x_hat, relative_to, homogeneous=True) is None


def kernel_dominance(P: Problem, x: Sequence[Scalar], x_tilde: Sequence[Scalar]) -> bool:
    """
    Whether G(x̃) ⊄ C for a kernel element x̃, which forces F(x + x̃) + C ⊋ F(x) + C.

    The strict inclusion is verified whenever the result is True.

    Raises:
        MembershipError: If x ∉ dom F or x̃ ∉ ker F.
    """
    require_regular(P, "the kernel dominance test")
    F, C = P.mapping, P.cone
    x, x_tilde = as_vector(x), as_vector(x_tilde)
    if not in_domain(F, x):
        raise MembershipError("point", x, f"point {format_vector(x)} is outside dom F")
    if not in_kernel(F, x_tilde):
        raise MembershipError("kernel direction", x_tilde, f"kernel direction {format_vector(x_tilde)} is outside ker F")
    G = recession_mapping(F)
    escapes = not contains(C.polyhedron, h_to_v(value(G, x_tilde)))
    if escapes:
        shifted = v_to_h(value_plus_cone(F, add(x, x_tilde), C))
        base = v_to_h(value_plus_cone(F, x, C))
        if not strictly_contains(shifted, base):
            raise RuntimeError("F(x + x̃) + C does not strictly contain F(x) + C")
    return escapes

