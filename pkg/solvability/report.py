"""
Report models for analyses, solution checks and synthesized solutions.

All models are pydantic; rationals are carried as strings `p` or `p/q` so the
JSON output stays exact. `render_*` produce the plain-text forms.
"""
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from polyhedra import HPolyhedron, h_to_v
from polyhedra.rational import format_fraction, format_vector


class ConeDescription(BaseModel):
    """A cone or polyhedron in both representations."""

    inequalities: List[str] = Field(description="Minimal H-representation, one readable row each")
    rows: List[List[str]] = Field(description="Coefficients followed by the right-hand side")
    points: List[str] = Field(default_factory=list, description="Vertices modulo the lineality space")
    rays: List[str] = Field(default_factory=list)
    lines: List[str] = Field(default_factory=list)

    @classmethod
    def of(cls, p: HPolyhedron, names: Sequence[str]) -> "ConeDescription":
        v = h_to_v(p)
        return cls(
            inequalities=p.describe(names),
            rows=[[format_fraction(c) for c in row.coefficients] + [format_fraction(row.rhs)] for row in p.inequalities],
            points=[format_vector(x) for x in v.points],
            rays=[format_vector(r) for r in v.rays],
            lines=[format_vector(l) for l in v.lines],
        )

    def short(self) -> str:
        if not self.inequalities:
            return "{all of space}"
        return "{" + ", ".join(self.inequalities) + "}"


class AnalysisReport(BaseModel):
    """Everything `analyze` finds out about one problem."""

    n: int
    q: int
    cone_source: str = Field(description="Where C came from: file, full_space, g_zero or trivial")
    feasible: bool
    regular: Optional[bool] = None
    bounded: Optional[bool] = None
    cone: Optional[ConeDescription] = None
    g_zero: Optional[ConeDescription] = None
    natural_cone: Optional[ConeDescription] = None
    image_cone: Optional[ConeDescription] = None
    upper_homog: Optional[ConeDescription] = None
    upper_image: Optional[ConeDescription] = None
    kernel: Optional[ConeDescription] = None
    natural_cone_regular: Optional[bool] = None
    image_cone_regular: Optional[bool] = None
    cond_line_free: Optional[bool] = None
    cond_natural: Optional[bool] = None
    solvable: bool = False
    vr_solvable: bool = False
    vr_solvable_relaxation: Optional[bool] = None
    failed_conditions: List[str] = Field(default_factory=list)
    suggested_cone: Optional[ConeDescription] = None
    suggested_cone_regular: Optional[bool] = None
    cone_relations: Dict[str, str] = Field(default_factory=dict)
    errors: List[str] = Field(default_factory=list)


class ElementVerdict(BaseModel):
    role: str = Field(description="point, direction or kernel_direction")
    element: str
    minimizing: bool
    dominator: Optional[str] = None


class SolutionVerdict(BaseModel):
    """Outcome of checking a candidate against a solution concept."""

    mode: str = Field(description="classic or modified")
    finite_infimizer: bool
    elements: List[ElementVerdict] = Field(default_factory=list)
    passed: bool


class SolveOutcome(BaseModel):
    mode: str
    solved: bool
    certified: bool = False
    points: List[str] = Field(default_factory=list)
    directions: List[str] = Field(default_factory=list)
    kernel_directions: List[str] = Field(default_factory=list)
    refinement_converged: Optional[bool] = None
    failed_conditions: List[str] = Field(default_factory=list)
    suggested_cone: Optional[ConeDescription] = None
    suggested_cone_regular: Optional[bool] = None
    verdict: Optional[SolutionVerdict] = None


_CONDITION_TEXT = {
    "feasibility": "the problem is infeasible",
    "line_free": "condition -C ∩ Q ⊆ C fails",
    "natural": "condition C ⊇ K fails",
}


def describe_condition(tag: str) -> str:
    return _CONDITION_TEXT.get(tag, tag)


def _flag(value: Optional[bool]) -> str:
    return "n/a" if value is None else ("yes" if value else "no")


def render_analysis(report: AnalysisReport) -> str:
    lines = [f"problem: n={report.n} q={report.q} cone={report.cone_source}"]
    lines.append(f"feasible: {_flag(report.feasible)}")
    lines.append(f"regular: {_flag(report.regular)}")
    for label, cone in (
        ("C", report.cone),
        ("G(0)", report.g_zero),
        ("K", report.natural_cone),
        ("G(R^n)", report.image_cone),
        ("Q", report.upper_homog),
        ("P", report.upper_image),
        ("ker F", report.kernel),
    ):
        if cone is not None:
            lines.append(f"{label} = {cone.short()}")
    lines.append(f"bounded: {_flag(report.bounded)}")
    lines.append(f"K regular: {_flag(report.natural_cone_regular)}")
    lines.append(f"G(R^n) regular: {_flag(report.image_cone_regular)}")
    for pair, relation in report.cone_relations.items():
        lines.append(f"{pair}: {relation}")
    lines.append(f"line-free condition (-C ∩ Q ⊆ C): {_flag(report.cond_line_free)}")
    lines.append(f"natural-cone condition (C ⊇ K): {_flag(report.cond_natural)}")
    lines.append(f"vectorial relaxation solvable: {_flag(report.vr_solvable)}")
    lines.append(f"solvable: {_flag(report.solvable)}")
    for tag in report.failed_conditions:
        lines.append(f"failed: {describe_condition(tag)}")
    if report.suggested_cone is not None:
        lines.append(f"suggested cone C+K = {report.suggested_cone.short()}")
        lines.append(f"suggested cone regular: {_flag(report.suggested_cone_regular)}")
    for error in report.errors:
        lines.append(f"error: {error}")
    return "\n".join(lines)


def render_verdict(verdict: SolutionVerdict) -> str:
    lines = [f"mode: {verdict.mode}", f"finite infimizer: {_flag(verdict.finite_infimizer)}"]
    for item in verdict.elements:
        text = f"{item.role} {item.element}: {'minimizing' if item.minimizing else 'not minimizing'}"
        if item.dominator is not None:
            text += f", dominated by {item.dominator}"
        lines.append(text)
    lines.append(f"passed: {_flag(verdict.passed)}")
    return "\n".join(lines)


def render_outcome(outcome: SolveOutcome) -> str:
    lines = [f"mode: {outcome.mode}"]
    if not outcome.solved:
        lines.append("no solution")
        for tag in outcome.failed_conditions:
            lines.append(f"failed: {describe_condition(tag)}")
        if outcome.suggested_cone is not None:
            lines.append(f"suggested cone C+K = {outcome.suggested_cone.short()}")
            lines.append(f"suggested cone regular: {_flag(outcome.suggested_cone_regular)}")
        return "\n".join(lines)
    lines.append("points: " + " ".join(outcome.points))
    lines.append("directions: " + " ".join(outcome.directions))
    if outcome.mode == "modified":
        lines.append("kernel_directions: " + " ".join(outcome.kernel_directions))
    lines.append(f"certified: {_flag(outcome.certified)}")
    if outcome.refinement_converged is False:
        lines.append("refinement: round budget exhausted")
    return "\n".join(lines)
