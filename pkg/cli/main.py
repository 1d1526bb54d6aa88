"""
Command-line entry point.

    python -m cli <command> --input problem.json [--seed N] [--samples N] [--budget N] [--json | --pretty]

Reports go to stdout as JSON; logs go to stderr and the log file.
Exit codes: 0 success, 1 reported mathematical failure, 2 input error.
"""
import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Tuple

from pydantic import ValidationError

from cli.commands import COMMAND_HANDLERS, resolve_options
from cli.problem import ProblemFile, load_problem
from constants import COMMANDS, EXIT_INPUT_ERROR, EXIT_MATH_FAILURE
from exceptions import (
    ChartError,
    ConnectionConflictError,
    DimensionMismatchError,
    ExprError,
    FormVanishesError,
    InvalidInputError,
    PfaffToolkitError,
    SearchExhaustedError,
)
from logging_config import get_logger

logger = get_logger("cli.main")


def _math_failure(exc: PfaffToolkitError, command: str) -> Dict[str, Any]:
    report = {
        "error": exc.kind,
        "step": getattr(exc, "step", command),
        "reason": getattr(exc, "reason", str(exc)),
    }
    failed = getattr(exc, "report", None)
    if failed is not None:
        report["report"] = failed.to_json()
    return report


def _input_error(exc: Exception) -> Dict[str, Any]:
    report = {"error": getattr(exc, "kind", "invalid_input"), "reason": str(exc)}
    position = getattr(exc, "position", None)
    if position is not None:
        report["position"] = position
    return report


def run(command: str, problem: ProblemFile, seed: int = None, samples: int = None,
        budget: int = None) -> Tuple[int, Dict[str, Any]]:
    """Dispatch one command; library exceptions become exit codes and error reports."""
    if command not in COMMAND_HANDLERS:
        return EXIT_INPUT_ERROR, {"error": "unknown_command", "reason": f"unknown command '{command}'"}
    options = resolve_options(problem, seed, samples, budget)
    logger.info(f"running '{command}' (n={problem.n}, seed={options.seed}, samples={options.samples}, "
                f"budget={options.budget})")
    try:
        return COMMAND_HANDLERS[command](problem, options)
    except (ChartError, SearchExhaustedError, FormVanishesError) as exc:
        logger.warning(f"'{command}' failed: {exc}")
        return EXIT_MATH_FAILURE, _math_failure(exc, command)
    except (InvalidInputError, ExprError, DimensionMismatchError, ConnectionConflictError) as exc:
        logger.error(f"'{command}' rejected its input: {exc}")
        return EXIT_INPUT_ERROR, _input_error(exc)


def summarize(command: str, code: int, report: Dict[str, Any]) -> str:
    """One human-readable line per report field for --pretty."""
    status = {0: "ok", 1: "failed", 2: "input error"}.get(code, str(code))
    lines = [f"{command}: {status}"]
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            continue
        lines.append(f"  {key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli",
        description="Exact Pfaffian-form toolkit: Pfaff rank, Legendrian planes and convex Pfaff-Darboux charts.")
    parser.add_argument("command", choices=COMMANDS, help="Operation to run")
    parser.add_argument("--input", required=True, help="Problem file (JSON)")
    parser.add_argument("--seed", type=int, help="Random seed (default: problem file, then settings)")
    parser.add_argument("--samples", type=int, help="Sample points for the verification ball")
    parser.add_argument("--budget", type=int, help="Candidate planes tried by leg-findpos")
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="Compact JSON report (default)")
    output.add_argument("--pretty", action="store_true", help="Summary followed by indented JSON")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        problem = load_problem(args.input)
    except (OSError, json.JSONDecodeError, ValidationError, PfaffToolkitError) as exc:
        logger.error(f"cannot load '{args.input}': {exc}")
        code, report = EXIT_INPUT_ERROR, _input_error(exc)
        if isinstance(exc, json.JSONDecodeError):
            report["position"] = exc.pos
    else:
        code, report = run(args.command, problem, args.seed, args.samples, args.budget)

    if args.pretty:
        print(summarize(args.command, code, report))
        print(json.dumps(report, indent=2))
    else:
        print(json.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
