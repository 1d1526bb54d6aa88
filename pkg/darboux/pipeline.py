"""
The convexification pipeline.

Each step is a function of the shared ConvexifyContext wrapped in a
PipelineStep; SequentialPipeline runs them in order and re-raises any
failure tagged with the name of the step where it happened.

Flow: precondition -> normalize_chart -> absorb_quadratic -> apply_phi ->
renormalize_chart -> apply_b -> apply_epsilon -> verify_representation

convexify_from_search puts a Leg+ search and the generating-function chart
in front of the same flow.
"""
from typing import Callable, List, Sequence

from config import settings
from connection.christoffel import Connection
from connection.definiteness import is_pd
from connection.hessian import s_omega
from connection.symform import restrict_form
from constants import (
    FLAG_FACTOR_POSITIVE,
    STEP_ABSORB,
    STEP_B,
    STEP_EPSILON,
    STEP_NORMALIZE,
    STEP_PHI,
    STEP_PRECONDITION,
    STEP_RENORMALIZE,
    STEP_SEARCH,
    STEP_VERIFY,
)
from core.rational import RationalLike, format_matrix, to_point
from darboux.chart import SeedChart, leaf_tangent, validate_seed_chart
from darboux.generating import chart_from_generating_function, generating_parameter
from darboux.representation import ConvexRep
from darboux.steps import StepResult, absorb_quadratic, apply_b, apply_epsilon, apply_phi, normalize_chart
from darboux.verify import report_radius, verify_representation
from exceptions import (
    ChartError,
    ChartValidationError,
    ExprError,
    FormVanishesError,
    HypothesisViolatedError,
    PreconditionError,
    SearchExhaustedError,
    VerificationError,
)
from forms.pform import PForm
from logging_config import get_logger
from pfaff.search import find_positive_legendrian
from shared.context import ConvexifyContext

logger = get_logger("darboux.pipeline")


class PipelineStep:
    """A named function of the context."""

    def __init__(self, func: Callable[[ConvexifyContext], ConvexifyContext], name: str = None,
                 description: str = ""):
        self.func = func
        self.name = name or func.__name__
        self.description = description

    def run(self, context: ConvexifyContext) -> ConvexifyContext:
        context.current_step = self.name
        logger.info(f"[{self.name}] start")
        try:
            result = self.func(context)
        except (ChartError, SearchExhaustedError) as exc:
            exc.step = self.name
            raise
        except (ExprError, FormVanishesError) as exc:
            raise PreconditionError(self.name, str(exc)) from exc
        context.steps_completed.append(self.name)
        logger.info(f"[{self.name}] done")
        return result if result is not None else context


class SequentialPipeline:
    """Runs steps in sequence, passing the context through."""

    def __init__(self, name: str, description: str, steps: Sequence[PipelineStep]):
        self.name = name
        self.description = description
        self.steps: List[PipelineStep] = list(steps)

    def run(self, context: ConvexifyContext) -> ConvexifyContext:
        logger.info(f"[{self.name}] running {len(self.steps)} steps")
        for step in self.steps:
            context = step.run(context)
        logger.info(f"[{self.name}] complete: {context.to_dict()}")
        return context


# -- step functions ----------------------------------------------------

def leaf_s_omega(omega: PForm, connection: Connection, chart: SeedChart, point: Sequence[RationalLike] = None):
    """S(omega) at x restricted to the chart's leaf tangent."""
    base = chart.base if point is None else to_point(point)
    return restrict_form(s_omega(omega, connection), leaf_tangent(chart, base))


def hypothesis_holds(omega: PForm, connection: Connection, chart: SeedChart,
                     point: Sequence[RationalLike] = None) -> bool:
    return is_pd(leaf_s_omega(omega, connection, chart, point))


def check_hypothesis(context: ConvexifyContext) -> ConvexifyContext:
    """The seed chart is valid (a may be negative) and S(omega) is PD on the leaf tangent at x."""
    report = validate_seed_chart(context.omega_original, context.seed_chart, context.base)
    if not report.passed_except(FLAG_FACTOR_POSITIVE):
        raise ChartValidationError(report, step=STEP_PRECONDITION)
    restricted = leaf_s_omega(context.omega_original, context.connection, context.seed_chart, context.base)
    if not is_pd(restricted):
        raise HypothesisViolatedError(
            STEP_PRECONDITION,
            f"S(omega) restricted to the leaf tangent at x is {format_matrix(restricted)}, not positive definite")
    context.omega = context.omega_original
    context.chart = context.seed_chart
    context.factor = None
    return context


def _advance(context: ConvexifyContext, result: StepResult) -> ConvexifyContext:
    context.omega = result.omega
    context.chart = result.chart
    if not result.factor.equals(1):
        context.factor = result.factor if context.factor is None else context.factor * result.factor
    if result.constant is not None:
        context.constants[result.name] = result.constant
    return context


def run_normalize(context: ConvexifyContext) -> ConvexifyContext:
    return _advance(context, normalize_chart(context.omega, context.chart, STEP_NORMALIZE))


def run_absorb(context: ConvexifyContext) -> ConvexifyContext:
    return _advance(context, absorb_quadratic(context.omega, context.chart, context.connection, context.base))


def run_phi(context: ConvexifyContext) -> ConvexifyContext:
    return _advance(context, apply_phi(context.omega, context.chart, context.connection, context.base))


def run_renormalize(context: ConvexifyContext) -> ConvexifyContext:
    return _advance(context, normalize_chart(context.omega, context.chart, STEP_RENORMALIZE))


def run_b(context: ConvexifyContext) -> ConvexifyContext:
    return _advance(context, apply_b(context.omega, context.chart, context.connection, context.base))


def run_epsilon(context: ConvexifyContext) -> ConvexifyContext:
    rep = apply_epsilon(context.omega, context.chart, context.connection, context.base)
    if context.factor is not None:
        # omega_original = factor * omega, so the coefficients absorb the factor
        rep.a = tuple(context.factor * ai for ai in rep.a)
    rep.leaves = context.seed_chart.y
    rep.certificate.c = context.constants.get(STEP_ABSORB)
    rep.certificate.m = context.constants.get(STEP_PHI)
    rep.certificate.b = context.constants.get(STEP_B)
    if rep.certificate.epsilon is not None:
        context.constants[STEP_EPSILON] = rep.certificate.epsilon
    context.rep = rep
    return context


def run_verify(context: ConvexifyContext) -> ConvexifyContext:
    report = verify_representation(context.omega_original, context.rep, context.connection,
                                   context.base, context.samples, context.seed)
    context.report = report
    context.rep.certificate.sampled_radius = report_radius(report)
    if not report.passed:
        raise VerificationError(report, step=STEP_VERIFY)
    return context


convexify_pipeline = SequentialPipeline(
    name="convexify",
    description="Seed chart to strictly convex Pfaff-Darboux representation.",
    steps=[
        PipelineStep(check_hypothesis, STEP_PRECONDITION, "validate the chart and the convexity hypothesis"),
        PipelineStep(run_normalize, STEP_NORMALIZE, "divide omega by a"),
        PipelineStep(run_absorb, STEP_ABSORB, "make H(y1) PD on ker dy1"),
        PipelineStep(run_phi, STEP_PHI, "make y1 strictly convex"),
        PipelineStep(run_renormalize, STEP_RENORMALIZE, "divide out 1/phi'(y1)"),
        PipelineStep(run_b, STEP_B, "make y2..yk strictly convex"),
        PipelineStep(run_epsilon, STEP_EPSILON, "tilt y1 and emit the representation"),
        PipelineStep(run_verify, STEP_VERIFY, "exact and sampled verification"),
    ],
)


def convexify_context(omega: PForm, connection: Connection, chart: SeedChart,
                      point: Sequence[RationalLike] = None, samples: int = None,
                      seed: int = None) -> ConvexifyContext:
    """Run the pipeline and return the full context (constants, report, steps)."""
    context = ConvexifyContext(
        omega_original=omega,
        connection=connection,
        seed_chart=chart,
        base=chart.base if point is None else to_point(point),
        samples=settings.DEFAULT_SAMPLES if samples is None else samples,
        seed=settings.DEFAULT_SEED if seed is None else seed,
    )
    return convexify_pipeline.run(context)


def convexify(omega: PForm, connection: Connection, chart: SeedChart,
              point: Sequence[RationalLike] = None, samples: int = None, seed: int = None) -> ConvexRep:
    return convexify_context(omega, connection, chart, point, samples, seed).rep


def convexify_from_search(omega: PForm, connection: Connection, chart: SeedChart, samples: int = None,
                          seed: int = None, budget: int = None) -> ConvexifyContext:
    """
    Search Leg+ at the chart's base, rebuild the chart around the plane found
    with the generating function and run the pipeline on the result.

    The chart must have a = 1; HypothesisViolatedError when the search finds
    no positive plane.
    """
    search = find_positive_legendrian(omega, chart.base, connection, budget, seed)
    if not search.found:
        raise HypothesisViolatedError(STEP_SEARCH, f"no nabla-positive Legendrian plane at x ({search.status}): "
                                                   f"{search.reason}")
    S0 = generating_parameter(chart, search.subspace)
    logger.info(f"[{STEP_SEARCH}] plane found after {search.samples} samples, S0 = {format_matrix(S0)}")
    rebuilt = chart_from_generating_function(omega, chart, S0)
    context = convexify_context(omega, connection, rebuilt, samples=samples, seed=seed)
    context.search = search
    context.generating = S0
    return context
