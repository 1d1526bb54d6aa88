"""
The chart rewrites of the convexification construction.

Every step takes a form omega presented by a chart (omega = chart.form())
and returns a StepResult: the new chart, the form it presents, and the
positive function ``factor`` with omega_in = factor * omega_out. Constants
c, m, b are searched over 1, 2, 4, ... and epsilon over 1, 1/2, 1/4, ...;
the first exact PD success wins.
"""
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from sympy import Rational

from config import settings
from connection.christoffel import Connection
from connection.definiteness import add_matrices, is_pd, outer, scale_matrix
from connection.hessian import hessian
from connection.symform import restrict_matrix
from constants import STEP_ABSORB, STEP_B, STEP_EPSILON, STEP_NORMALIZE, STEP_PHI
from core.expr import Expr
from core.linalg import nullspace
from core.rational import RationalLike, format_matrix, to_point
from darboux.chart import SeedChart, chart_identity_holds, leaf_tangent
from darboux.representation import Certificate, ConvexRep
from darboux.submersion import jacobian_at
from exceptions import PreconditionError, SearchExhaustedError
from forms.pform import PForm
from logging_config import get_logger

logger = get_logger("darboux.steps")

RationalMatrix = List[List[Rational]]


@dataclass(frozen=True)
class StepResult:
    name: str
    omega: PForm
    chart: SeedChart
    factor: Expr
    constant: Optional[Rational] = None


# -- constant searches -------------------------------------------------

def search_doubling(accept: Callable[[Rational], bool], constant: str, step: str) -> Rational:
    value = Rational(1)
    for _ in range(settings.MAX_DOUBLINGS):
        if accept(value):
            logger.debug(f"{step}: {constant} = {value} accepted")
            return value
        logger.debug(f"{step}: {constant} = {value} rejected")
        value *= 2
    raise SearchExhaustedError(constant, settings.MAX_DOUBLINGS, step)


def search_halving(accept: Callable[[Rational], bool], constant: str, step: str) -> Rational:
    value = Rational(1)
    for _ in range(settings.MAX_HALVINGS):
        if accept(value):
            logger.debug(f"{step}: {constant} = {value} accepted")
            return value
        logger.debug(f"{step}: {constant} = {value} rejected")
        value /= 2
    raise SearchExhaustedError(constant, settings.MAX_HALVINGS, step)


def choose_c(H1_on_K: RationalMatrix, G_on_K: RationalMatrix) -> Rational:
    """Smallest power of two c with H1 + c G PD (both restricted to K)."""
    return search_doubling(lambda c: is_pd(add_matrices(H1_on_K, scale_matrix(c, G_on_K))), "c", STEP_ABSORB)


def choose_m(H1: RationalMatrix, gradient: Sequence[Rational]) -> Rational:
    """Smallest power of two m with H1 + m g g^T PD."""
    G = outer(gradient, gradient)
    return search_doubling(lambda m: is_pd(add_matrices(H1, scale_matrix(m, G))), "m", STEP_PHI)


def choose_b(H1: RationalMatrix, others: Sequence[RationalMatrix]) -> Rational:
    """Smallest power of two b with H_j + b H1 PD for every j."""
    return search_doubling(
        lambda b: all(is_pd(add_matrices(Hj, scale_matrix(b, H1))) for Hj in others), "b", STEP_B)


def choose_epsilon(H1: RationalMatrix, others: Sequence[RationalMatrix]) -> Rational:
    """Largest power of 1/2 with H1 - epsilon * sum_j H_j PD."""
    total = add_matrices(*others) if others else scale_matrix(0, H1)
    return search_halving(lambda eps: is_pd(add_matrices(H1, scale_matrix(-eps, total))), "epsilon", STEP_EPSILON)


# -- helpers -----------------------------------------------------------

def _require_identity(omega: PForm, chart: SeedChart, step: str):
    if settings.VERIFY_STEP_IDENTITIES and not chart_identity_holds(omega, chart):
        raise PreconditionError(step, "omega is not presented by the chart")


def _require_unit_factor(chart: SeedChart, step: str):
    if not chart.has_unit_factor():
        raise PreconditionError(step, "the chart factor a must be identically 1")


def _hessian_at(u: Expr, connection: Connection, point) -> RationalMatrix:
    return hessian(u, connection).evaluate(point)


def _one(chart: SeedChart) -> Expr:
    return Expr.one(chart.ring)


# -- steps -------------------------------------------------------------

def normalize_chart(omega: PForm, chart: SeedChart, step: str = STEP_NORMALIZE) -> StepResult:
    """omega_bar = a^-1 omega with a chart whose factor is 1; signs of a and y flipped first if a(x) < 0."""
    _require_identity(omega, chart, step)
    a_value = chart.a.evaluate(chart.base)
    if a_value == 0:
        raise PreconditionError(step, "a(x) = 0")
    a, y = chart.a, chart.y
    if a_value < 0:
        a, y = -a, tuple(-f for f in y)
        logger.info(f"{step}: a(x) = {a_value} < 0, signs of a and y reversed")
    normalized = chart.with_functions(a=_one(chart), y=y)
    return StepResult(step, omega.scale(a.inverse()), normalized, a)


def absorb_quadratic(omega: PForm, chart: SeedChart, connection: Connection,
                     point: Sequence[RationalLike] = None) -> StepResult:
    """y1 + c/2 sum (y^i)^2, p_i - c y^i with c making H(y1) + c sum (dy^i)^2 PD on ker dy1(x)."""
    base = chart.base if point is None else to_point(point)
    _require_unit_factor(chart, STEP_ABSORB)
    _require_identity(omega, chart, STEP_ABSORB)

    H1 = _hessian_at(chart.y[0], connection, base)
    W = leaf_tangent(chart, base)
    on_leaf = restrict_matrix(H1, W.basis)
    if not is_pd(on_leaf):
        raise PreconditionError(
            STEP_ABSORB,
            f"S(omega) is not positive definite on the leaf tangent at x (restriction {format_matrix(on_leaf)})")

    rows = jacobian_at(chart.y, base)
    K = nullspace(rows[:1], len(base))
    G = add_matrices(*[outer(r, r) for r in rows[1:]]) if len(rows) > 1 else scale_matrix(0, H1)
    c = choose_c(restrict_matrix(H1, K), restrict_matrix(G, K))

    half_c = c / 2
    y1 = chart.y[0]
    for yi in chart.y[1:]:
        y1 = y1 + yi * yi * half_c
    p = [pi - yi * c for pi, yi in zip(chart.p, chart.y[1:])]
    result = chart.with_functions(y=(y1,) + chart.y[1:], p=p)
    logger.info(f"{STEP_ABSORB}: c = {c}")
    return StepResult(STEP_ABSORB, omega, result, _one(chart), c)


def apply_phi(omega: PForm, chart: SeedChart, connection: Connection,
              point: Sequence[RationalLike] = None) -> StepResult:
    """phi(t) = t + m t^2 / 2 applied to y1; the chart factor becomes 1/phi'(y1)."""
    base = chart.base if point is None else to_point(point)
    _require_unit_factor(chart, STEP_PHI)
    _require_identity(omega, chart, STEP_PHI)

    H1 = _hessian_at(chart.y[0], connection, base)
    gradient = jacobian_at(chart.y[:1], base)[0]
    K = nullspace([gradient], len(base))
    if not is_pd(restrict_matrix(H1, K)):
        raise PreconditionError(STEP_PHI, "H(y1) is not positive definite on ker dy1(x)")
    m = choose_m(H1, gradient)

    y1 = chart.y[0]
    phi_prime = y1 * m + 1
    phi = y1 + y1 * y1 * (m / 2)
    result = chart.with_functions(a=phi_prime.inverse(), y=(phi,) + chart.y[1:],
                                  p=[phi_prime * pi for pi in chart.p])
    logger.info(f"{STEP_PHI}: m = {m}")
    return StepResult(STEP_PHI, omega, result, _one(chart), m)


def apply_b(omega: PForm, chart: SeedChart, connection: Connection,
            point: Sequence[RationalLike] = None) -> StepResult:
    """y^j + b y1 for j >= 2; the factor 1 - b sum p_j is divided out so the new chart has a = 1."""
    base = chart.base if point is None else to_point(point)
    _require_unit_factor(chart, STEP_B)
    _require_identity(omega, chart, STEP_B)

    H1 = _hessian_at(chart.y[0], connection, base)
    if not is_pd(H1):
        raise PreconditionError(STEP_B, "y1 is not strictly convex at x")
    if chart.k == 1:
        return StepResult(STEP_B, omega, chart, _one(chart), None)
    others = [_hessian_at(yj, connection, base) for yj in chart.y[1:]]
    b = choose_b(H1, others)

    y1 = chart.y[0]
    a_b = _one(chart)
    for pj in chart.p:
        a_b = a_b - pj * b
    y = [y1] + [yj + y1 * b for yj in chart.y[1:]]
    p = [pj / a_b for pj in chart.p]
    result = chart.with_functions(y=y, p=p)
    logger.info(f"{STEP_B}: b = {b}")
    return StepResult(STEP_B, omega.scale(a_b.inverse()), result, a_b, b)


def apply_epsilon(omega: PForm, chart: SeedChart, connection: Connection,
                  point: Sequence[RationalLike] = None) -> ConvexRep:
    """u1 = y1 - epsilon sum y^j, u^j = y^j, a1 = 1, a_j = epsilon + p_j."""
    base = chart.base if point is None else to_point(point)
    _require_unit_factor(chart, STEP_EPSILON)
    _require_identity(omega, chart, STEP_EPSILON)

    H1 = _hessian_at(chart.y[0], connection, base)
    others = [_hessian_at(yj, connection, base) for yj in chart.y[1:]]
    for j, Hj in enumerate(others, start=2):
        if not is_pd(Hj):
            raise PreconditionError(STEP_EPSILON, f"y{j} is not strictly convex at x")
    if any(pj.evaluate(base) != 0 for pj in chart.p):
        raise PreconditionError(STEP_EPSILON, "p_j(x) != 0")

    if chart.k == 1:
        if not is_pd(H1):
            raise PreconditionError(STEP_EPSILON, "y1 is not strictly convex at x")
        return ConvexRep(1, base, chart.y, (_one(chart),), Certificate(), leaves=chart.y)

    epsilon = choose_epsilon(H1, others)
    u1 = chart.y[0]
    for yj in chart.y[1:]:
        u1 = u1 - yj * epsilon
    a = (_one(chart),) + tuple(pj + epsilon for pj in chart.p)
    logger.info(f"{STEP_EPSILON}: epsilon = {epsilon}")
    return ConvexRep(chart.k, base, (u1,) + chart.y[1:], a, Certificate(epsilon=epsilon), leaves=chart.y)
