# Command-line front end
from cli.main import build_parser, main, run
from cli.problem import ProblemFile, load_problem, problem_from_dict

__all__ = ["build_parser", "main", "run", "ProblemFile", "load_problem", "problem_from_dict"]
