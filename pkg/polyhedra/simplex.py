"""
Exact linear programming through cddlib's simplex in fraction mode.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import cdd

from .double_description import inequality_matrix
from .exceptions import DimensionMismatchError
from .linalg import neg
from .rational import Vector, as_vector, zero_vector
from .types import HPolyhedron, LinearInequality

logger = logging.getLogger(__name__)

INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
OPTIMAL = "optimal"

_INFEASIBLE_STATUSES = (
    cdd.LPStatusType.INCONSISTENT,
    cdd.LPStatusType.STRUC_INCONSISTENT,
    cdd.LPStatusType.DUAL_UNBOUNDED,
)
_UNBOUNDED_STATUSES = (
    cdd.LPStatusType.DUAL_INCONSISTENT,
    cdd.LPStatusType.STRUC_DUAL_INCONSISTENT,
    cdd.LPStatusType.UNBOUNDED,
)


@dataclass(frozen=True)
class LPOutcome:
    """
    Result of `lp_optimize`.

    Attributes:
        tag: One of "infeasible", "unbounded", "optimal".
        value: Optimal objective value (only when optimal).
        witness: Optimal point when optimal, an improving recession direction
            when unbounded, None when infeasible.
    """

    tag: str
    value: Optional[Fraction] = None
    witness: Optional[Vector] = None

    @property
    def is_optimal(self) -> bool:
        return self.tag == OPTIMAL

    @property
    def is_unbounded(self) -> bool:
        return self.tag == UNBOUNDED

    @property
    def is_infeasible(self) -> bool:
        return self.tag == INFEASIBLE


def lp_optimize(p: HPolyhedron, objective: Sequence, sense: str = "min") -> LPOutcome:
    """
    Optimize a linear objective over an H-polyhedron exactly.

    Args:
        p: The feasible region.
        objective: Objective vector, one entry per coordinate of `p`.
        sense: "min" or "max".

    Returns:
        LPOutcome with the exact optimum, an improving ray, or infeasibility.

    Raises:
        ValueError: If `sense` is not "min" or "max".
        DimensionMismatchError: If the objective length differs from `p.dimension`.
        RuntimeError: If cddlib stops without a verdict.
    """
    if sense not in ("min", "max"):
        raise ValueError(f"Unsupported optimization sense: {sense}. Use 'min' or 'max'")
    c = as_vector(objective)
    if len(c) != p.dimension:
        raise DimensionMismatchError(p.dimension, len(c), "objective")
    # minimizing descent·z is the same problem
    descent = c if sense == "min" else neg(c)

    if not p.inequalities:
        if not any(c):
            return LPOutcome(OPTIMAL, Fraction(0), zero_vector(p.dimension))
        return LPOutcome(UNBOUNDED, None, neg(descent))

    matrix = inequality_matrix(p)
    matrix.obj_type = cdd.LPObjType.MIN if sense == "min" else cdd.LPObjType.MAX
    matrix.obj_func = (Fraction(0),) + c
    lp = cdd.LinProg(matrix)
    lp.solve()

    if lp.status == cdd.LPStatusType.OPTIMAL:
        point = tuple(Fraction(x) for x in lp.primal_solution)
        logger.debug("LP optimal with value %s", lp.obj_value)
        return LPOutcome(OPTIMAL, Fraction(lp.obj_value), point)
    if lp.status in _INFEASIBLE_STATUSES:
        logger.debug("LP infeasible")
        return LPOutcome(INFEASIBLE)
    if lp.status in _UNBOUNDED_STATUSES:
        logger.debug("LP unbounded")
        return LPOutcome(UNBOUNDED, None, _improving_ray(p, descent))
    raise RuntimeError(f"cddlib returned LP status {lp.status}")


def _improving_ray(p: HPolyhedron, descent: Vector) -> Vector:
    """A recession direction r of `p` with descent·r ≤ -1."""
    rows = tuple(row.homogeneous() for row in p.inequalities)
    steep = LinearInequality(neg(descent), Fraction(1))
    ray = feasible_point(HPolyhedron(p.dimension, rows + (steep,)))
    if ray is None:
        raise RuntimeError("LP reported unbounded but no improving recession direction exists")
    return ray


def feasible_point(p: HPolyhedron) -> Optional[Vector]:
    """A point of `p`, or None when `p` is empty."""
    outcome = lp_optimize(p, [0] * p.dimension)
    return outcome.witness if outcome.is_optimal else None
