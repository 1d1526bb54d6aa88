"""
Command handlers. Each takes the validated problem and the resolved run
options and returns (exit_code, report); mathematical failures that are
answers rather than errors (a non-Legendrian subspace, a failing chart)
are reported with exit code 1.
"""
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from config import settings
from connection.definiteness import is_nd, is_nsd, is_pd, is_psd
from connection.hessian import hessian, s_omega
from connection.symform import SymForm, restrict_form
from constants import (
    CMD_BFORM,
    CMD_CAUCHY,
    CMD_CHART_GENFN,
    CMD_CHART_VALIDATE,
    CMD_CONVEXIFY,
    CMD_HESSIAN,
    CMD_KERNEL,
    CMD_LEG_CHECK,
    CMD_LEG_FINDPOS,
    CMD_LEG_SAMPLE,
    CMD_RANK,
    CMD_SOMEGA,
    CMD_SUBMERSION,
    CMD_VERIFY,
    EXIT_MATH_FAILURE,
    EXIT_OK,
)
from core.linalg import rank
from core.rational import format_matrix
from darboux.chart import leaf_tangent, validate_seed_chart
from darboux.generating import chart_from_generating_function
from darboux.pipeline import convexify_context, convexify_from_search, hypothesis_holds
from darboux.submersion import jacobian_at, submersion_kernel
from darboux.verify import verify_representation
from cli.problem import ProblemFile
from pfaff.classify import pfaff_class
from pfaff.pointwise import bform_at, cauchy_at, is_legendrian, kernel_at
from pfaff.search import find_positive_legendrian
from pfaff.symplectic import sample_legendrian

Result = Tuple[int, Dict[str, Any]]


@dataclass(frozen=True)
class RunOptions:
    seed: int
    samples: int
    budget: int


def resolve_options(problem: ProblemFile, seed: int = None, samples: int = None, budget: int = None) -> RunOptions:
    """Flags override the problem file, which overrides settings."""
    def pick(flag, from_file, default):
        if flag is not None:
            return flag
        return from_file if from_file is not None else default

    return RunOptions(
        seed=pick(seed, problem.seed, settings.DEFAULT_SEED),
        samples=pick(samples, problem.samples, settings.DEFAULT_SAMPLES),
        budget=pick(budget, problem.budget, settings.DEFAULT_BUDGET),
    )


def definiteness(matrix) -> str:
    if is_pd(matrix):
        return "positive_definite"
    if is_nd(matrix):
        return "negative_definite"
    if is_psd(matrix):
        return "positive_semidefinite"
    if is_nsd(matrix):
        return "negative_semidefinite"
    return "indefinite"


def _symbolic(form: SymForm) -> List[List[str]]:
    return [[str(entry) for entry in row] for row in form.matrix()]


def _exit(ok: bool) -> int:
    return EXIT_OK if ok else EXIT_MATH_FAILURE


# -- pointwise Pfaff data ----------------------------------------------

def cmd_rank(problem: ProblemFile, options: RunOptions) -> Result:
    return EXIT_OK, pfaff_class(problem.load_omega(), problem.base_point()).to_json()


def cmd_kernel(problem: ProblemFile, options: RunOptions) -> Result:
    return EXIT_OK, {"kernel": kernel_at(problem.load_omega(), problem.base_point()).to_json()}


def cmd_cauchy(problem: ProblemFile, options: RunOptions) -> Result:
    return EXIT_OK, {"cauchy": cauchy_at(problem.load_omega(), problem.base_point()).to_json()}


def cmd_bform(problem: ProblemFile, options: RunOptions) -> Result:
    return EXIT_OK, {"bform": bform_at(problem.load_omega(), problem.base_point()).to_json()}


# -- Legendrian planes -------------------------------------------------

def cmd_leg_check(problem: ProblemFile, options: RunOptions) -> Result:
    omega = problem.load_omega()
    point = problem.base_point()
    W = problem.load_subspace()
    legendrian = is_legendrian(omega, point, W)
    report: Dict[str, Any] = {"legendrian": legendrian, "dim": W.dim}
    if legendrian:
        restricted = restrict_form(s_omega(omega, problem.load_connection()), W)
        report["restricted"] = format_matrix(restricted)
        report["positive"] = is_pd(restricted)
    return _exit(legendrian), report


def cmd_leg_sample(problem: ProblemFile, options: RunOptions) -> Result:
    W = sample_legendrian(problem.load_omega(), problem.base_point(), problem.load_S0())
    return EXIT_OK, {"subspace": W.to_json()}


def cmd_leg_findpos(problem: ProblemFile, options: RunOptions) -> Result:
    search = find_positive_legendrian(problem.load_omega(), problem.base_point(), problem.load_connection(),
                                      budget=options.budget, seed=options.seed)
    return _exit(search.found), search.to_json()


# -- connection --------------------------------------------------------

def cmd_hessian(problem: ProblemFile, options: RunOptions) -> Result:
    H = hessian(problem.load_u(), problem.load_connection())
    at_point = H.evaluate(problem.base_point())
    return EXIT_OK, {
        "hessian": _symbolic(H),
        "at_point": format_matrix(at_point),
        "definiteness": definiteness(at_point),
        "strictly_convex": is_pd(at_point),
    }


def cmd_somega(problem: ProblemFile, options: RunOptions) -> Result:
    S = s_omega(problem.load_omega(), problem.load_connection())
    at_point = S.evaluate(problem.base_point())
    report = {
        "somega": _symbolic(S),
        "at_point": format_matrix(at_point),
        "definiteness": definiteness(at_point),
    }
    if problem.chart is not None:
        restricted = restrict_form(S, leaf_tangent(problem.load_chart(), problem.base_point()))
        report["on_leaf_tangent"] = format_matrix(restricted)
        report["positive_on_leaf_tangent"] = is_pd(restricted)
    return EXIT_OK, report


# -- seed charts and the pipeline --------------------------------------

def cmd_chart_validate(problem: ProblemFile, options: RunOptions) -> Result:
    report = validate_seed_chart(problem.load_omega(), problem.load_chart(), problem.base_point())
    return _exit(report.passed), report.to_json()


def cmd_chart_genfn(problem: ProblemFile, options: RunOptions) -> Result:
    chart = chart_from_generating_function(problem.load_omega(), problem.load_chart(), problem.load_S0())
    return EXIT_OK, {
        "chart": chart.to_json(),
        "leaf_tangent": leaf_tangent(chart).to_json(),
    }


def cmd_convexify(problem: ProblemFile, options: RunOptions) -> Result:
    """
    With S0 in the file, the chart is first rebuilt from the generating function.
    Without it the chart is used as given when its leaves already satisfy the
    hypothesis, and otherwise rebuilt around a searched Leg+ plane.
    """
    omega = problem.load_omega()
    connection = problem.load_connection()
    chart = problem.load_chart()
    point = problem.base_point()
    if problem.S0 is not None:
        chart = chart_from_generating_function(omega, chart, problem.load_S0())
    if problem.S0 is None and not hypothesis_holds(omega, connection, chart, point):
        context = convexify_from_search(omega, connection, chart, samples=options.samples, seed=options.seed,
                                        budget=options.budget)
    else:
        context = convexify_context(omega, connection, chart, point, samples=options.samples, seed=options.seed)
    report = {
        "rep": context.rep.to_json(),
        "certificate": context.rep.certificate.to_json(),
        "verification": context.report.to_json(),
        "steps": list(context.steps_completed),
    }
    if context.search is not None:
        report["search"] = context.search.to_json()
        report["S0"] = format_matrix(context.generating)
    return EXIT_OK, report


def cmd_verify(problem: ProblemFile, options: RunOptions) -> Result:
    report = verify_representation(problem.load_omega(), problem.load_rep(), problem.load_connection(),
                                   problem.base_point(), samples=options.samples, seed=options.seed)
    return _exit(report.passed), report.to_json()


def cmd_submersion(problem: ProblemFile, options: RunOptions) -> Result:
    functions = problem.load_functions()
    point = problem.base_point()
    if problem.expected_rank is not None:
        expected = problem.expected_rank
    elif problem.functions is None:
        expected = 2 * problem.load_chart().k - 1
    else:
        expected = len(functions)
    found = rank(jacobian_at(functions, point))
    return _exit(found == expected), {
        "rank": found,
        "expected_rank": expected,
        "submersion": found == expected,
        "kernel": submersion_kernel(functions, point).to_json(),
    }


COMMAND_HANDLERS: Dict[str, Callable[[ProblemFile, RunOptions], Result]] = {
    CMD_RANK: cmd_rank,
    CMD_KERNEL: cmd_kernel,
    CMD_CAUCHY: cmd_cauchy,
    CMD_BFORM: cmd_bform,
    CMD_LEG_CHECK: cmd_leg_check,
    CMD_LEG_SAMPLE: cmd_leg_sample,
    CMD_LEG_FINDPOS: cmd_leg_findpos,
    CMD_HESSIAN: cmd_hessian,
    CMD_SOMEGA: cmd_somega,
    CMD_CHART_VALIDATE: cmd_chart_validate,
    CMD_CHART_GENFN: cmd_chart_genfn,
    CMD_CONVEXIFY: cmd_convexify,
    CMD_VERIFY: cmd_verify,
    CMD_SUBMERSION: cmd_submersion,
}
