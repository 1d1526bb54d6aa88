"""Test connection Hessians, the symmetric form S(omega) and exact definiteness"""
import os
import sys

# Add project root to path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

import numpy as np
import sympy
from sympy import Rational

from connection.christoffel import Connection, connection_from_json
from connection.definiteness import is_nd, is_nsd, is_pd, is_psd, leading_principal_minors, pd_witness
from connection.hessian import covariant_derivative, hessian, is_strictly_convex_at, s_omega
from connection.symform import restrict_form, symmetric_product
from core.expr import Expr, format_expr
from core.parser import parse_expr
from core.ring import coordinate_ring, default_vars
from darboux.chart import leaf_tangent
from darboux.generating import chart_from_generating_function
from darboux.models import fixture_corpus, standard_model, standard_seed_chart
from exceptions import ConnectionConflictError, InvalidInputError
from forms.pform import PForm, one_form
from pfaff.subspace import Subspace
from shared.sampling import (
    make_rng,
    random_christoffel_entries,
    random_one_form_coefficients,
    random_point,
    random_polynomial,
    random_positive,
    random_rational,
    random_symmetric,
)

VARS = default_vars(3)
RING = coordinate_ring(VARS)
X1, X2, X3 = (Expr.variable(RING, i) for i in range(3))
ORIGIN = (0, 0, 0)
FLAT = Connection.flat(RING)


def model():
    return PForm.exact(X1) + PForm.exact(X2).scale(X3)


def test_flat_hessian_known_values():
    assert hessian(parse_expr("1/2*x2^2", VARS), FLAT).evaluate(ORIGIN) == [[0, 0, 0], [0, 1, 0], [0, 0, 0]]
    H = hessian(parse_expr("x1 + x2*x3 - 1/2*x2^2", VARS), FLAT).evaluate(ORIGIN)
    assert H == [[0, 0, 0], [0, -1, 1], [0, 1, 0]]


def test_christoffel_contribution():
    connection = Connection.from_entries(RING, [(0, 1, 1, 1)])
    H = hessian(X1, connection).evaluate((3, -1, 2))
    assert H == [[0, 0, 0], [0, 1, 0], [0, 0, 0]]


def test_strict_convexity_known_values():
    assert is_strictly_convex_at(parse_expr("1/2*(x1^2 + x2^2 + x3^2)", VARS), FLAT, ORIGIN)
    assert not is_strictly_convex_at(X1, FLAT, ORIGIN)
    identity = Connection.from_entries(RING, [(0, i, i, 1) for i in range(3)])
    assert is_strictly_convex_at(X1, identity, ORIGIN)


def test_s_omega_of_model():
    S = s_omega(model(), FLAT)
    assert S.evaluate(ORIGIN) == [[0, 0, 0], [0, 0, Rational(1, 2)], [0, Rational(1, 2), 0]]
    assert S.equals(symmetric_product(PForm.exact(X2), PForm.exact(X3)))


def test_s_omega_of_exact_form_is_hessian():
    rng = make_rng(13)
    connection = Connection.from_entries(RING, random_christoffel_entries(rng, 3))
    u = random_polynomial(rng, RING, degree=3)
    assert s_omega(PForm.exact(u), connection).equals(hessian(u, connection))


def test_antisymmetric_part_is_d_omega():
    rng = make_rng(17)
    connection = Connection.from_entries(RING, random_christoffel_entries(rng, 3, count=6))
    omega = one_form(RING, random_one_form_coefficients(rng, RING))
    skew = covariant_derivative(omega, connection).antisymmetric_part()
    d_omega = omega.d()
    for i in range(3):
        for k in range(i + 1, 3):
            assert skew[i][k].equals(d_omega.coefficient((i, k)) * Rational(1, 2))


def test_s_omega_is_nabla_omega_minus_d_omega():
    rng = make_rng(47)
    for _ in range(20):
        connection = Connection.from_entries(RING, random_christoffel_entries(rng, 3, count=6))
        omega = one_form(RING, random_one_form_coefficients(rng, RING))
        T = covariant_derivative(omega, connection)
        skew = T.antisymmetric_part()
        S = s_omega(omega, connection)
        for i in range(3):
            for k in range(3):
                assert S.entry(i, k).equals(T.entries[i][k] - skew[i][k])
                assert S.entry(i, k).equals(S.entry(k, i))


def test_s_omega_of_rescaled_form():
    """S(g omega) = dg o omega + g S(omega) with g = 1/a."""
    rng = make_rng(49)
    for _ in range(20):
        connection = Connection.from_entries(RING, random_christoffel_entries(rng, 3, count=6))
        omega = one_form(RING, random_one_form_coefficients(rng, RING))
        g = random_positive(rng, RING).inverse()
        left = s_omega(omega.scale(g), connection)
        right = symmetric_product(PForm.exact(g), omega) + s_omega(omega, connection).scale(g)
        assert left.equals(right)


def test_hessian_chain_rules():
    rng = make_rng(51)
    for _ in range(20):
        connection = Connection.from_entries(RING, random_christoffel_entries(rng, 3, count=6))
        ys = [random_polynomial(rng, RING, degree=2) for _ in range(3)]
        squares = [symmetric_product(PForm.exact(y), PForm.exact(y)) for y in ys]

        # phi(t) = t + m t^2 / 2
        m = random_rational(rng)
        phi = ys[0] + ys[0] * ys[0] * (m / 2)
        expected = hessian(ys[0], connection).scale(ys[0] * m + 1) + squares[0].scale(m)
        assert hessian(phi, connection).equals(expected)

        c = random_rational(rng)
        absorbed = ys[0] + (ys[1] * ys[1] + ys[2] * ys[2]) * (c / 2)
        expected = hessian(ys[0], connection)
        for y, square in zip(ys[1:], squares[1:]):
            expected = expected + (hessian(y, connection).scale(y) + square).scale(c)
        assert hessian(absorbed, connection).equals(expected)


def test_leaf_restriction_matches_s_omega():
    """On the leaf tangent of a chart with a = 1, S(omega) and H(y1) agree at x."""
    rng = make_rng(53)
    omega = standard_model(3, 2)
    for _ in range(20):
        connection = Connection.from_entries(omega.ring, random_christoffel_entries(rng, 3, count=6))
        chart = chart_from_generating_function(omega, standard_seed_chart(3, 2), random_symmetric(rng, 1))
        W = leaf_tangent(chart)
        assert restrict_form(hessian(chart.y[0], connection), W) == restrict_form(s_omega(omega, connection), W)


def test_restrict_form_known_values():
    S = s_omega(model(), FLAT)
    assert restrict_form(S, Subspace(ORIGIN, ((0, 1, 1),))) == [[1]]
    assert restrict_form(S, Subspace(ORIGIN, ((0, 1, -1),))) == [[-1]]
    empty = restrict_form(S, Subspace.zero(ORIGIN))
    assert empty == []
    assert is_pd(empty)


def test_definiteness_known_values():
    assert is_pd([[2, 1], [1, 1]])
    assert leading_principal_minors([[2, 1], [1, 1]]) == [2, 1]
    assert not is_pd([[1, 2], [2, 1]])
    assert pd_witness([[1, 2], [2, 1]]) == (2, -3)
    assert not is_pd([[0, 0], [0, 1]])
    assert is_psd([[0, 0], [0, 1]])
    assert not is_psd([[1, 2], [2, 1]])
    assert is_nsd([[0, 0], [0, -1]])
    assert is_nd([[-1, 0], [0, -2]])
    assert not is_nd([[0, 0], [0, -1]])


def test_definiteness_rejects_asymmetric():
    try:
        is_pd([[1, 2], [0, 1]])
        assert False, "expected an asymmetric matrix error"
    except InvalidInputError:
        pass


def test_connection_conflict_detection():
    try:
        Connection.from_entries(RING, [(0, 1, 2, 1), (0, 2, 1, 2)])
        assert False, "expected a conflict"
    except ConnectionConflictError as exc:
        assert (exc.k, exc.i, exc.j) == (1, 3, 2)
    agreeing = Connection.from_entries(RING, [(0, 1, 2, 1), (0, 2, 1, 1)])
    assert agreeing.gamma(0, 2, 1).equals(1)


def test_connection_json_round_trip():
    rng = make_rng(19)
    connection = Connection.from_entries(RING, random_christoffel_entries(rng, 3, count=5))
    again = connection_from_json(connection.to_json(), VARS)
    assert again.to_json() == connection.to_json()


def _finite_difference_hessian(f, point, h=1e-3):
    n = len(point)
    H = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            def shifted(si, sj):
                x = np.array(point, dtype=float)
                x[i] += si * h
                x[j] += sj * h
                return f(*x)
            H[i, j] = (shifted(1, 1) - shifted(1, -1) - shifted(-1, 1) + shifted(-1, -1)) / (4 * h * h)
    return H


def test_flat_hessians_against_finite_differences():
    """Cubic polynomials: central differences through a lambdified sympy oracle."""
    rng = make_rng(23)
    symbols = sympy.symbols(VARS)
    for _ in range(10):
        u = random_polynomial(rng, RING, degree=3, terms=6)
        oracle = sympy.lambdify(symbols, sympy.sympify(format_expr(u).replace("^", "**"),
                                                       locals=dict(zip(VARS, symbols))))
        point = random_point(rng, 3)
        exact = np.array(hessian(u, FLAT).evaluate(point), dtype=float)
        approx = _finite_difference_hessian(oracle, [float(v) for v in point])
        assert np.max(np.abs(exact - approx)) <= 1e-6


def test_fixture_hessians_against_finite_differences():
    rng = make_rng(29)
    for case in fixture_corpus():
        if not case.connection.is_flat():
            continue
        names = default_vars(case.n)
        symbols = sympy.symbols(names)
        for y in case.chart.y:
            oracle = sympy.lambdify(symbols, sympy.sympify(format_expr(y).replace("^", "**"),
                                                           locals=dict(zip(names, symbols))))
            for _ in range(10):
                point = random_point(rng, case.n)
                exact = np.array(hessian(y, case.connection).evaluate(point), dtype=float)
                approx = _finite_difference_hessian(oracle, [float(v) for v in point])
                assert np.max(np.abs(exact - approx)) <= 1e-6


if __name__ == "__main__":
    print("Testing connection, Hessians and definiteness...")
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
