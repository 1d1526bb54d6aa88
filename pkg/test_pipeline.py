"""Test the full convexification pipeline on the models and the fixture corpus"""
import os
import sys

# Add project root to path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from sympy import Rational

from connection.christoffel import Connection
from constants import (
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
from core.expr import Expr
from core.parser import parse_expr
from core.ring import default_vars
from darboux.chart import SeedChart
from darboux.generating import chart_from_generating_function
from darboux.chart import leaf_tangent
from darboux.models import fixture_corpus, negative_connection, shifted_seed_chart, standard_model, standard_seed_chart
from darboux.pipeline import convexify, convexify_context, convexify_from_search, hypothesis_holds
from darboux.verify import report_radius, verify_representation
from exceptions import ChartValidationError, HypothesisViolatedError
from forms.pform import PForm

OMEGA = standard_model(3, 2)
RING = OMEGA.ring
FLAT = Connection.flat(RING)
ALL_STEPS = [STEP_PRECONDITION, STEP_NORMALIZE, STEP_ABSORB, STEP_PHI,
             STEP_RENORMALIZE, STEP_B, STEP_EPSILON, STEP_VERIFY]


def model_chart(S0=((1,),)):
    return chart_from_generating_function(OMEGA, standard_seed_chart(3, 2), [list(row) for row in S0])


def test_model_certificate():
    context = convexify_context(OMEGA, FLAT, model_chart(), samples=200, seed=0)
    certificate = context.rep.certificate
    assert (certificate.c, certificate.m, certificate.b, certificate.epsilon) == (2, 1, 1, Rational(1, 2))
    assert certificate.to_json()["epsilon"] == "1/2"
    assert context.report.passed, context.report.failed_flags()
    assert certificate.sampled_radius is not None and certificate.sampled_radius > 0
    assert context.rep.form().equals(OMEGA)


def test_context_records_progress():
    context = convexify_context(OMEGA, FLAT, model_chart(), samples=50, seed=3)
    assert context.steps_completed == ALL_STEPS
    assert context.current_step == STEP_VERIFY
    summary = context.to_dict()
    assert summary["k"] == 2
    assert summary["verified"] is True
    assert summary["constants"][STEP_ABSORB] == "2"


def test_non_unit_factor_is_carried_into_coefficients():
    two = Expr.constant(RING, 2)
    chart = model_chart().with_functions(a=two)
    omega = OMEGA.scale(two)
    rep = convexify(omega, FLAT, chart, samples=50, seed=0)
    assert rep.form().equals(omega)
    assert rep.a[0].evaluate((0, 0, 0)) == 2


def test_higher_class_model():
    omega = standard_model(5, 3)
    chart = chart_from_generating_function(omega, standard_seed_chart(5, 3), [[1, 0], [0, 1]])
    context = convexify_context(omega, Connection.flat(omega.ring), chart, samples=100, seed=0)
    assert context.report.passed
    assert context.rep.k == 3
    assert len(context.rep.u) == 3


def test_class_one_chart():
    y = parse_expr("x1 + 1/2*(x1^2 + x2^2 + x3^2)", default_vars(3))
    omega = PForm.exact(y)
    chart = SeedChart(k=1, base=(0, 0, 0), a=Expr.one(RING), y=(y,), p=())
    context = convexify_context(omega, FLAT, chart, samples=50, seed=0)
    assert context.report.passed
    assert context.rep.certificate.epsilon is None
    assert context.rep.certificate.b is None
    assert context.rep.certificate.to_json()["b"] is None
    assert STEP_EPSILON not in context.constants
    assert STEP_B not in context.constants


def test_fixture_corpus_passes():
    cases = fixture_corpus()
    assert len(cases) == 14
    assert len({case.name for case in cases}) == len(cases)
    for case in cases:
        context = convexify_context(case.omega, case.connection, case.chart, samples=200, seed=0)
        assert context.report.passed, f"{case.name}: {context.report.failed_flags()}"
        assert context.rep.form().equals(case.omega), case.name


def test_verification_is_deterministic():
    case = fixture_corpus()[1]
    rep = convexify(case.omega, case.connection, case.chart, samples=100, seed=7)
    first = verify_representation(case.omega, rep, case.connection, samples=100, seed=7)
    second = verify_representation(case.omega, rep, case.connection, samples=100, seed=7)
    assert first.to_json() == second.to_json()
    assert report_radius(first) == rep.certificate.sampled_radius


def test_negative_connection_violates_hypothesis():
    try:
        convexify(OMEGA, negative_connection(RING), model_chart())
        assert False, "expected the hypothesis to fail"
    except HypothesisViolatedError as exc:
        assert exc.step == STEP_PRECONDITION
        assert exc.kind == "hypothesis_violated"


def test_invalid_seed_chart_is_rejected():
    vars = default_vars(3)
    chart = SeedChart(k=2, base=(0, 0, 0), a=Expr.one(RING),
                      y=(parse_expr("x1", vars), parse_expr("x2 + x1", vars)), p=(parse_expr("x3", vars),))
    try:
        convexify(OMEGA, FLAT, chart)
        assert False, "expected an invalid chart"
    except ChartValidationError as exc:
        assert exc.step == STEP_PRECONDITION
        assert not exc.report.passed



def test_shifted_base_point():
    chart = chart_from_generating_function(OMEGA, shifted_seed_chart(3, 2, (1, 2, 3)), [[1]])
    assert chart.base == (1, 2, 3)
    context = convexify_context(OMEGA, FLAT, chart, samples=200, seed=0)
    assert context.report.passed, context.report.failed_flags()
    assert context.rep.base == (1, 2, 3)
    assert context.rep.form().equals(OMEGA)
    assert context.rep.certificate.sampled_radius > 0


def test_variable_factor_is_carried_into_coefficients():
    a = parse_expr("1 - x2 + x3^2", default_vars(3))
    omega = OMEGA.scale(a)
    context = convexify_context(omega, FLAT, model_chart().with_functions(a=a), samples=200, seed=0)
    assert context.report.passed, context.report.failed_flags()
    assert context.rep.form().equals(omega)


def test_negative_factor_violates_hypothesis():
    minus_three = Expr.constant(RING, -3)
    try:
        convexify(OMEGA.scale(minus_three), FLAT, model_chart().with_functions(a=minus_three))
        assert False, "expected the hypothesis to fail"
    except HypothesisViolatedError as exc:
        assert exc.step == STEP_PRECONDITION
        assert "-3" in exc.reason


def test_convexify_from_search_on_model():
    seed_chart = standard_seed_chart(3, 2)
    assert not hypothesis_holds(OMEGA, FLAT, seed_chart)
    context = convexify_from_search(OMEGA, FLAT, seed_chart, samples=100, seed=0)
    assert context.search.found
    assert context.generating == [[2]]
    assert leaf_tangent(context.seed_chart).same_span(context.search.subspace)
    assert hypothesis_holds(OMEGA, FLAT, context.seed_chart)
    assert context.report.passed, context.report.failed_flags()
    assert context.steps_completed == ALL_STEPS
    assert context.to_dict()["search"] == "found"


def test_convexify_from_search_higher_class():
    omega = standard_model(5, 3)
    context = convexify_from_search(omega, Connection.flat(omega.ring), standard_seed_chart(5, 3), samples=100)
    assert context.generating == [[2, 0], [0, 2]]
    assert context.report.passed, context.report.failed_flags()
    assert context.rep.form().equals(omega)


def test_search_without_positive_plane_stops_pipeline():
    # the Cauchy direction x4 of the plain n = 4 model carries S(omega) = 0
    n4 = standard_model(4, 2)
    cases = [(n4, Connection.flat(n4.ring), standard_seed_chart(4, 2)),
             (OMEGA, negative_connection(RING), standard_seed_chart(3, 2))]
    for omega, connection, chart in cases:
        try:
            convexify_from_search(omega, connection, chart)
            assert False, "expected the search to come back empty"
        except HypothesisViolatedError as exc:
            assert exc.step == STEP_SEARCH
            assert "empty" in exc.reason


if __name__ == "__main__":
    print("Testing the convexification pipeline...")
    print("=" * 60)
    failures = 0
    for name, test in list(globals().items()):
        if name.startswith("test_") and callable(test):
            try:
                test()
                print(f"✅ {name}")
            except Exception as e:
                failures += 1
                print(f"❌ {name}: {e!r}")
    print("=" * 60)
    sys.exit(1 if failures else 0)
