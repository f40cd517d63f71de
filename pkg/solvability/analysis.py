"""
One-shot analysis of a problem: every derived cone, the regularity checks,
the solvability conditions and the relations between the distinguished cones.
"""
import logging
from typing import Dict

from polyhedra.exceptions import PolyhedronError
from set_optimization import (
    OrderingCone,
    Problem,
    SetOptimizationError,
    algebraic_kernel,
    augment_with_cone,
    coordinate_names,
    g_zero,
    image_cone,
    is_feasible,
    is_regular,
    minkowski_cone,
    natural_cone,
    regularize,
    upper_image,
    upper_image_homog,
)

from .conditions import FEASIBILITY, LINE_FREE, NATURAL, line_free_holds, natural_holds, vr_solvable_via_relaxation
from .report import AnalysisReport, ConeDescription

logger = logging.getLogger(__name__)

EQUAL = "equal"
STRICT_SUBSET = "strict_subset"
STRICT_SUPERSET = "strict_superset"
INCOMPARABLE = "incomparable"


def cone_relation(first: OrderingCone, second: OrderingCone) -> str:
    """How `first` relates to `second` under inclusion."""
    inside = second.contains_cone(first)
    outside = first.contains_cone(second)
    if inside and outside:
        return EQUAL
    if inside:
        return STRICT_SUBSET
    if outside:
        return STRICT_SUPERSET
    return INCOMPARABLE


def analyze(P: Problem, cone_source: str = "file", backend: str = "fourier_motzkin") -> AnalysisReport:
    """
    Build the full report for P.

    Errors met on the way are recorded in the report instead of raised.
    """
    F, C = P.mapping, P.cone
    xs, ys = coordinate_names(F)
    report = AnalysisReport(n=F.n, q=F.q, cone_source=cone_source, feasible=is_feasible(P))
    try:
        report.cone = ConeDescription.of(C.minimized().polyhedron, ys)
        if not report.feasible:
            report.failed_conditions = [FEASIBILITY]
            logger.info("analysis: infeasible")
            return report

        G0 = g_zero(F)
        K = natural_cone(F, backend)
        image = image_cone(F, backend)
        Q = upper_image_homog(P, backend)
        report.g_zero = ConeDescription.of(G0.polyhedron, ys)
        report.natural_cone = ConeDescription.of(K.polyhedron, ys)
        report.image_cone = ConeDescription.of(image.polyhedron, ys)
        report.upper_homog = ConeDescription.of(Q.polyhedron, ys)
        report.upper_image = ConeDescription.of(upper_image(P, backend), ys)
        report.kernel = ConeDescription.of(algebraic_kernel(F), xs)
        report.natural_cone_regular = is_regular(K, F)
        report.image_cone_regular = is_regular(image, F)
        report.bounded = C.contains_cone(Q)
        report.cone_relations = _relations(C, G0, K, image, Q)

        report.regular = is_regular(C, F)
        if not report.regular:
            suggested = regularize(C, F)
            report.suggested_cone = ConeDescription.of(suggested.polyhedron, ys)
            report.suggested_cone_regular = is_regular(suggested, augment_with_cone(F, C, backend))
            report.errors.append("Ordering cone is not regular for F (lin C ⊆ G(0) ⊆ C fails); suggested cone is G(0) + C, regular for F + C")
            logger.info("analysis: cone not regular")
            return report

        report.cond_line_free = line_free_holds(P, backend)
        report.cond_natural = natural_holds(P, backend)
        report.vr_solvable = report.cond_line_free
        report.vr_solvable_relaxation = vr_solvable_via_relaxation(P, backend)
        report.solvable = report.cond_line_free and report.cond_natural
        report.failed_conditions = [
            tag for tag, ok in ((LINE_FREE, report.cond_line_free), (NATURAL, report.cond_natural)) if not ok
        ]
        if not report.cond_natural:
            suggested = minkowski_cone(C, K)
            report.suggested_cone = ConeDescription.of(suggested.polyhedron, ys)
            report.suggested_cone_regular = is_regular(suggested, F)
            if not report.suggested_cone_regular:
                logger.warning("suggested cone C + K is not regular for F")
    except (SetOptimizationError, PolyhedronError) as exc:
        report.errors.append(str(exc))
        logger.error("analysis aborted: %s", exc)
    except RuntimeError as exc:
        report.errors.append(f"Internal consistency check failed: {exc}")
        logger.error("analysis aborted", exc_info=True)
    logger.info("analysis: solvable=%s vr_solvable=%s", report.solvable, report.vr_solvable)
    return report


def _relations(C, G0, K, image, Q) -> Dict[str, str]:
    return {
        "C vs K": cone_relation(C, K),
        "K vs Q": cone_relation(K, Q),
        "G(0) vs K": cone_relation(G0, K),
        "K vs G(R^n)": cone_relation(K, image),
    }
