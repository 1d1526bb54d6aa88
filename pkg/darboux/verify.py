"""
Exact verification of a convex representation omega = sum a_i du^i at x,
followed by a sampled-ball certificate for positivity and convexity near x.
"""
from typing import Optional, Sequence

from sympy import Rational

from config import settings
from connection.christoffel import Connection
from connection.definiteness import is_pd, pd_witness
from connection.hessian import hessian
from constants import (
    FLAG_REP_BALL,
    FLAG_REP_CONVEX,
    FLAG_REP_IDENTITY,
    FLAG_REP_KERNEL,
    FLAG_REP_LEAVES,
    FLAG_REP_POSITIVE,
    FLAG_REP_SUBMERSION,
)
from core.expr import Expr
from core.rational import RationalLike, format_rational, to_point, to_rational
from darboux.report import Report
from darboux.representation import ConvexRep
from darboux.submersion import check_submersion, submersion_kernel
from exceptions import ExprError, FormVanishesError
from forms.pform import PForm, wedge_all
from logging_config import get_logger
from pfaff.pointwise import cauchy_at
from shared.sampling import ball_offsets, make_rng, shift_point

logger = get_logger("darboux.verify")


def leaves_constant(u: Sequence[Expr], leaves: Sequence[Expr]) -> bool:
    """
    span{du^i} = span{dy^j} over the rational-function field: every du^i ^ dY
    vanishes, dY = dy1 ^ ... ^ dyk is nonzero, and du1 ^ ... ^ duk is nonzero.
    """
    ring = u[0].ring
    dY = wedge_all([PForm.exact(y) for y in leaves], ring)
    if dY.is_zero() or len(u) != len(leaves):
        return False
    if any(not PForm.exact(ui).wedge(dY).is_zero() for ui in u):
        return False
    return not wedge_all([PForm.exact(ui) for ui in u], ring).is_zero()


def _point_ok(rep: ConvexRep, hessians, point) -> Optional[str]:
    """None if (ii) and (iii) hold at the point, else a short reason."""
    try:
        for i, ai in enumerate(rep.a):
            if ai.evaluate(point) <= 0:
                return f"a{i + 1} <= 0"
        for i, H in enumerate(hessians):
            if not is_pd(H.evaluate(point)):
                return f"H(u{i + 1}) not PD"
    except ExprError:
        return "pole"
    return None


def sampled_radius(rep: ConvexRep, connection: Connection, samples: int, seed: int):
    """Largest radius start/2^t (t <= MAX_RADIUS_BISECTIONS) at which every sample passes, with the last failure."""
    hessians = [hessian(ui, connection) for ui in rep.u]
    offsets = ball_offsets(make_rng(seed), len(rep.base), samples)
    radius = to_rational(settings.SAMPLE_RADIUS_START)
    failure = None
    for _ in range(settings.MAX_RADIUS_BISECTIONS + 1):
        failure = None
        for offset in offsets:
            point = shift_point(rep.base, offset, radius)
            reason = _point_ok(rep, hessians, point)
            if reason is not None:
                failure = {"radius": format_rational(radius),
                           "point": [format_rational(v) for v in point], "reason": reason}
                break
        if failure is None:
            logger.debug(f"sampled ball certified at radius {radius}")
            return radius, None
        logger.debug(f"radius {radius} rejected: {failure['reason']}")
        radius /= 2
    return None, failure


def verify_representation(omega: PForm, rep: ConvexRep, connection: Connection,
                          point: Sequence[RationalLike] = None, samples: int = None,
                          seed: int = None) -> Report:
    samples = settings.DEFAULT_SAMPLES if samples is None else samples
    seed = settings.DEFAULT_SEED if seed is None else seed
    base = rep.base if point is None else to_point(point)
    report = Report()

    report.record(FLAG_REP_IDENTITY, omega.equals(rep.form()))

    exact_ok = True
    try:
        values = [ai.evaluate(base) for ai in rep.a]
        bad = {f"a{i + 1}": format_rational(v) for i, v in enumerate(values) if v <= 0}
        exact_ok &= report.record(FLAG_REP_POSITIVE, not bad, bad)
    except ExprError as exc:
        exact_ok &= report.record(FLAG_REP_POSITIVE, False, {"error": str(exc)})

    try:
        witnesses = {}
        for i, ui in enumerate(rep.u):
            failure = pd_witness(hessian(ui, connection).evaluate(base))
            if failure is not None:
                witnesses[f"u{i + 1}"] = {"minor": failure[0], "value": format_rational(failure[1])}
        exact_ok &= report.record(FLAG_REP_CONVEX, not witnesses, witnesses)
    except ExprError as exc:
        exact_ok &= report.record(FLAG_REP_CONVEX, False, {"error": str(exc)})

    if rep.leaves:
        report.record(FLAG_REP_LEAVES, leaves_constant(rep.u, rep.leaves))
    else:
        report.skip(FLAG_REP_LEAVES, "the representation carries no leaf functions")

    functions = rep.submersion_functions()
    expected = 2 * rep.k - 1
    try:
        report.record(FLAG_REP_SUBMERSION, check_submersion(functions, base, expected),
                      {"expected_rank": expected})
        kernel = submersion_kernel(functions, base)
        report.record(FLAG_REP_KERNEL, kernel.same_span(cauchy_at(omega, base)),
                      {"kernel_dim": kernel.dim})
    except (ExprError, FormVanishesError) as exc:
        report.record(FLAG_REP_SUBMERSION, False, {"error": str(exc)})
        report.record(FLAG_REP_KERNEL, False, {"error": str(exc)})

    radius, failure = (None, {"reason": "exact checks at x failed"})
    if exact_ok:
        radius, failure = sampled_radius(rep, connection, samples, seed)
    report.record(FLAG_REP_BALL, radius is not None, failure)
    report.details["sampled_radius"] = None if radius is None else format_rational(radius)
    report.details["samples"] = samples
    report.details["seed"] = seed

    logger.info(f"verification: passed={report.passed}, radius={report.details['sampled_radius']}")
    return report


def report_radius(report: Report) -> Optional[Rational]:
    value = report.details.get("sampled_radius")
    return None if value is None else to_rational(value)
