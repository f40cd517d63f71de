"""
Plain-text file formats for problems, solution candidates and vector linear
programs.

Every file is line based: a header keyword, `dim_x` / `dim_y` declarations,
section keywords each followed by rows of rational tokens (`p` or `p/q`), and a
closing `end`. Blank lines and everything after `#` are ignored.

    problem               solution              vlp
    dim_x 2               points                dim_x 2
    dim_y 2               0 0                   dim_y 2
    graph                 directions            objective
    1 0 0 0 0             0 1                   1 0
    ...                   kernel_directions     0 1
    cone                  end                   constraints
    0 1                                         1 0 0
    1 -1                                        cone
    end                                         1 0
                                                end
"""
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from polyhedra import is_empty
from polyhedra.rational import Vector, as_fraction, format_fraction
from set_optimization import OrderingCone, PolyMapping, Problem, from_vlp, g_zero

from solvability import SolutionCandidate

PROBLEM_HEADER = "problem"
SOLUTION_HEADER = "solution"
VLP_HEADER = "vlp"
END = "end"

CONE_FROM_FILE = "file"
CONE_FULL_SPACE = "full_space"
CONE_G_ZERO = "g_zero"
CONE_TRIVIAL = "trivial"


class ProblemFormatError(ValueError):
    """Raised for malformed input files; carries the 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


Row = Tuple[int, List[str]]


@dataclass
class _Parsed:
    dims: Dict[str, int]
    sections: Dict[str, List[Row]]
    end_line: int


def _tokenize(text: str) -> List[Row]:
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            rows.append((number, content.split()))
    return rows


def _parse(text: str, header: str, dim_keys: Sequence[str], section_keys: Sequence[str]) -> _Parsed:
    rows = _tokenize(text)
    if not rows:
        raise ProblemFormatError(f"empty input, expected '{header}'", 1)
    number, tokens = rows[0]
    if tokens != [header]:
        raise ProblemFormatError(f"expected header '{header}', got {' '.join(tokens)!r}", number)

    dims: Dict[str, int] = {}
    sections: Dict[str, List[Row]] = {}
    current: Optional[str] = None
    for index, (number, tokens) in enumerate(rows[1:], start=2):
        keyword = tokens[0]
        if keyword == END:
            if len(tokens) != 1:
                raise ProblemFormatError("'end' takes no arguments", number)
            if index < len(rows):
                raise ProblemFormatError("content after 'end'", rows[index][0])
            missing = [key for key in dim_keys if key not in dims]
            if missing:
                raise ProblemFormatError(f"missing declaration {missing[0]}", number)
            return _Parsed(dims, sections, number)
        if keyword in dim_keys:
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise ProblemFormatError(f"'{keyword}' needs one positive integer", number)
            if keyword in dims:
                raise ProblemFormatError(f"duplicate declaration {keyword}", number)
            if sections:
                raise ProblemFormatError(f"'{keyword}' must precede all sections", number)
            dims[keyword] = int(tokens[1])
            continue
        if keyword in section_keys:
            if len(tokens) != 1:
                raise ProblemFormatError(f"section keyword '{keyword}' takes no arguments", number)
            if keyword in sections:
                raise ProblemFormatError(f"duplicate section {keyword}", number)
            current = keyword
            sections[current] = []
            continue
        if current is None:
            raise ProblemFormatError(f"unexpected {keyword!r} outside any section", number)
        sections[current].append((number, tokens))
    last = rows[-1][0]
    raise ProblemFormatError("missing 'end' (truncated file)", last + 1)


def _vectors(rows: List[Row], arity: int, what: str) -> Tuple[Vector, ...]:
    vectors = []
    for number, tokens in rows:
        if len(tokens) != arity:
            raise ProblemFormatError(f"{what} row needs {arity} numbers, got {len(tokens)}", number)
        try:
            vectors.append(tuple(as_fraction(t) for t in tokens))
        except ValueError as exc:
            raise ProblemFormatError(str(exc), number)
    return tuple(vectors)


@dataclass(frozen=True)
class ProblemFile:
    """
    A parsed problem file. `cone` is None when the file has no cone section.
    """

    mapping: PolyMapping
    cone: Optional[OrderingCone] = None

    @property
    def cone_source(self) -> str:
        if self.cone is None:
            return CONE_TRIVIAL if is_empty(self.mapping.graph) else CONE_G_ZERO
        return CONE_FROM_FILE if self.cone.rows else CONE_FULL_SPACE

    def to_problem(self) -> Problem:
        """
        The problem with the declared cone, or with C = G(0) when none is declared.
        G(0) is undefined for an empty graph; the cone is then {0}.
        """
        cone = self.cone
        if cone is None:
            cone = OrderingCone.trivial(self.mapping.q) if is_empty(self.mapping.graph) else g_zero(self.mapping)
        return Problem(self.mapping, cone)


def parse_problem(text: str) -> ProblemFile:
    parsed = _parse(text, PROBLEM_HEADER, ("dim_x", "dim_y"), ("graph", "cone"))
    n, q = parsed.dims["dim_x"], parsed.dims["dim_y"]
    if "graph" not in parsed.sections:
        raise ProblemFormatError("missing section 'graph'", parsed.end_line)
    graph = _vectors(parsed.sections["graph"], n + q + 1, "graph")
    mapping = PolyMapping.from_rows(n, q, graph)
    cone = None
    if "cone" in parsed.sections:
        cone = OrderingCone.from_rows(q, _vectors(parsed.sections["cone"], q, "cone"))
    return ProblemFile(mapping, cone)


def parse_solution(text: str, n: int) -> SolutionCandidate:
    """
    Raises:
        ProblemFormatError: If a section is missing, a row has the wrong length
            or the points section is empty.
    """
    keys = ("points", "directions", "kernel_directions")
    parsed = _parse(text, SOLUTION_HEADER, (), keys)
    for key in keys:
        if key not in parsed.sections:
            raise ProblemFormatError(f"missing section '{key}'", parsed.end_line)
    points = _vectors(parsed.sections["points"], n, "point")
    if not points:
        raise ProblemFormatError("section 'points' must not be empty", parsed.end_line)
    return SolutionCandidate(
        points,
        _vectors(parsed.sections["directions"], n, "direction"),
        _vectors(parsed.sections["kernel_directions"], n, "kernel direction"),
    )


@dataclass(frozen=True)
class VlpFile:
    objective: Tuple[Vector, ...]
    constraints: Tuple[Vector, ...]
    cone: Optional[OrderingCone] = None

    def to_problem(self, default_cone: str = "nonnegative_orthant") -> Problem:
        q = len(self.objective)
        if self.cone is not None:
            cone = self.cone
        elif default_cone == "full_space":
            cone = OrderingCone.full_space(q)
        else:
            cone = OrderingCone.nonnegative_orthant(q)
        return from_vlp(self.objective, [row[:-1] for row in self.constraints], [row[-1] for row in self.constraints], cone)


def parse_vlp(text: str) -> VlpFile:
    parsed = _parse(text, VLP_HEADER, ("dim_x", "dim_y"), ("objective", "constraints", "cone"))
    n, q = parsed.dims["dim_x"], parsed.dims["dim_y"]
    if "objective" not in parsed.sections:
        raise ProblemFormatError("missing section 'objective'", parsed.end_line)
    objective = _vectors(parsed.sections["objective"], n, "objective")
    if len(objective) != q:
        raise ProblemFormatError(f"objective needs {q} rows, got {len(objective)}", parsed.end_line)
    constraints = _vectors(parsed.sections.get("constraints", []), n + 1, "constraint")
    cone = None
    if "cone" in parsed.sections:
        cone = OrderingCone.from_rows(q, _vectors(parsed.sections["cone"], q, "cone"))
    return VlpFile(objective, constraints, cone)


def _row_text(values: Sequence) -> str:
    return " ".join(format_fraction(v) for v in values)


def format_problem(mapping: PolyMapping, cone: Optional[OrderingCone] = None) -> str:
    """Canonical problem file text; the cone section is left out when `cone` is None."""
    lines = [PROBLEM_HEADER, f"dim_x {mapping.n}", f"dim_y {mapping.q}", "graph"]
    lines += [_row_text(a + bb + (rhs,)) for a, bb, rhs in mapping.rows]
    if cone is not None:
        lines.append("cone")
        lines += [_row_text(row.coefficients) for row in cone.rows]
    lines.append(END)
    return "\n".join(lines) + "\n"


def format_solution(cand: SolutionCandidate) -> str:
    lines = [SOLUTION_HEADER, "points"]
    lines += [_row_text(x) for x in cand.points]
    lines.append("directions")
    lines += [_row_text(x) for x in cand.directions]
    lines.append("kernel_directions")
    lines += [_row_text(x) for x in cand.kernel_directions]
    lines.append(END)
    return "\n".join(lines) + "\n"


def read_text(path: str) -> str:
    """File contents, or standard input when `path` is '-'."""
    if path == "-":
        return sys.stdin.read()
    with open(path, "r") as handle:
        return handle.read()


def write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w") as handle:
        handle.write(text)
