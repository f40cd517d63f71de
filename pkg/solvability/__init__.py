from .analysis import analyze, cone_relation
from .candidate import SolutionCandidate
from .certification import check_solution, check_solution_modified, is_finite_infimizer
from .conditions import (
    Solvability,
    condition_line_free,
    condition_natural,
    require_regular,
    solvable,
    solvable_oracle,
    vr_solvable,
    vr_solvable_via_relaxation,
)
from .minimality import (
    find_dominator,
    is_minimizing_direction,
    is_minimizing_point,
    kernel_dominance,
)
from .report import AnalysisReport, ConeDescription, ElementVerdict, SolutionVerdict, SolveOutcome
from .synthesis import refine_candidate, synthesize_infimizer, synthesize_solution
