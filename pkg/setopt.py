import argparse
import logging
import sys
from typing import List, Optional

import yaml
from dotenv import load_dotenv

from problem_io import (
    format_problem,
    parse_problem,
    parse_solution,
    parse_vlp,
    read_text,
    resolve_config,
    write_text,
)
from problem_io.formats import ProblemFile
from set_optimization import vectorial_relaxation
from solvability import (
    analyze,
    check_solution,
    check_solution_modified,
    require_regular,
    synthesize_solution,
)
from solvability.report import render_analysis, render_outcome, render_verdict

logger = logging.getLogger("setopt")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Analyze polyhedral convex set optimization problems exactly")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--config",
                         help="Path to settings YAML (can also be set via SETOPT_CONFIG env var)")
        return sub

    analyze_cmd = add_command("analyze", "Report derived cones and the solvability verdict")
    analyze_cmd.add_argument("problem", help="Problem file, or - for standard input")
    analyze_cmd.add_argument("--json", action="store_true", help="Print the report as one line of JSON")

    relax_cmd = add_command("relax", "Write the vectorial relaxation as a problem file")
    relax_cmd.add_argument("problem", help="Problem file, or - for standard input")
    relax_cmd.add_argument("-o", "--output", default="-", help="Output path (default: standard output)")

    check_cmd = add_command("check", "Check a solution candidate")
    check_cmd.add_argument("problem", help="Problem file, or - for standard input")
    check_cmd.add_argument("solution", help="Solution file, or - for standard input")
    check_cmd.add_argument("--modified", action="store_true", help="Use the modified solution concept with kernel directions")
    check_cmd.add_argument("--json", action="store_true", help="Print the verdict as one line of JSON")

    solve_cmd = add_command("solve", "Synthesize and certify a solution")
    solve_cmd.add_argument("problem", help="Problem file, or - for standard input")
    solve_cmd.add_argument("--modified", action="store_true", help="Use the modified solution concept with kernel directions")
    solve_cmd.add_argument("--json", action="store_true", help="Print the outcome as one line of JSON")

    vlp_cmd = add_command("from-vlp", "Embed a vector linear program as a problem file")
    vlp_cmd.add_argument("vlp", help="VLP file, or - for standard input")
    vlp_cmd.add_argument("-o", "--output", default="-", help="Output path (default: standard output)")
    return parser


def cmd_analyze(args, config) -> int:
    problem_file = parse_problem(read_text(args.problem))
    report = analyze(problem_file.to_problem(), problem_file.cone_source, config["projection_backend"])
    print(report.model_dump_json() if args.json else render_analysis(report))
    if report.errors:
        for error in report.errors:
            print(f"Error: {error}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK if report.solvable else EXIT_NEGATIVE


def cmd_relax(args, config) -> int:
    problem_file = parse_problem(read_text(args.problem))
    relaxed = vectorial_relaxation(problem_file.mapping)
    write_text(args.output, format_problem(relaxed, problem_file.cone))
    return EXIT_OK


def cmd_check(args, config) -> int:
    problem_file: ProblemFile = parse_problem(read_text(args.problem))
    candidate = parse_solution(read_text(args.solution), problem_file.mapping.n)
    problem = problem_file.to_problem()
    require_regular(problem, "solution checking")
    backend = config["projection_backend"]
    if args.modified:
        verdict = check_solution_modified(problem, candidate, backend)
    else:
        verdict = check_solution(problem, candidate.merged(), backend)
    print(verdict.model_dump_json() if args.json else render_verdict(verdict))
    return EXIT_OK if verdict.passed else EXIT_NEGATIVE


def cmd_solve(args, config) -> int:
    problem = parse_problem(read_text(args.problem)).to_problem()
    outcome = synthesize_solution(problem, args.modified, config["max_refinement_rounds"], config["projection_backend"])
    print(outcome.model_dump_json() if args.json else render_outcome(outcome))
    return EXIT_OK if outcome.solved and outcome.certified else EXIT_NEGATIVE


def cmd_from_vlp(args, config) -> int:
    problem = parse_vlp(read_text(args.vlp)).to_problem(config["default_vlp_cone"])
    write_text(args.output, format_problem(problem.mapping, problem.cone))
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "relax": cmd_relax,
    "check": cmd_check,
    "solve": cmd_solve,
    "from-vlp": cmd_from_vlp,
}


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = resolve_config(args.config)
    except (OSError, ValueError, yaml.YAMLError) as e:
        print(f"Error loading configuration: {e}", file=sys.stderr)
        return EXIT_ERROR
    logging.basicConfig(stream=sys.stderr, level=config["log_level"],
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        return COMMANDS[args.command](args, config)
    except (OSError, ValueError) as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:
        logger.error("command %s crashed", args.command, exc_info=True)
        print(f"Internal error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
