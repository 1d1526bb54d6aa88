"""Test pointwise Pfaff data: class, kernel, Cauchy space, pairing and Legendrian planes"""
import os
import sys

# Add project root to path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from sympy import Rational

from connection.christoffel import Connection
from connection.definiteness import is_pd
from constants import SEARCH_EMPTY, SEARCH_FOUND
from core.expr import Expr
from core.linalg import bilinear
from core.ring import coordinate_ring, default_vars
from darboux.models import convexifiable_model, negative_connection, standard_model
from exceptions import FormVanishesError, InvalidInputError
from forms.pform import PForm, one_form
from pfaff.classify import pfaff_class
from pfaff.pointwise import bform_at, cauchy_at, d_omega_matrix, is_legendrian, kernel_at
from pfaff.search import find_positive_legendrian
from pfaff.subspace import Subspace, subspace_from_json
from pfaff.symplectic import (
    legendrian_chart,
    legendrian_coordinates,
    legendrian_dimension,
    sample_legendrian,
    symplectic_basis,
)
from shared.sampling import (
    make_rng,
    random_one_form_coefficients,
    random_point,
    random_positive,
    random_symmetric,
)

HALF = Rational(1, 2)


def origin(n):
    return (0,) * n


def unit(n, i):
    """The coordinate vector for x_i (1-based)."""
    return tuple(int(j == i - 1) for j in range(n))


def span(n, *vectors):
    return Subspace(origin(n), tuple(vectors))


def test_pfaff_class_of_models():
    ring = coordinate_ring(default_vars(3))
    dx1 = PForm.exact(Expr.variable(ring, 0))
    result = pfaff_class(dx1, origin(3))
    assert (result.k, result.identically_degenerate) == (1, True)

    result = pfaff_class(standard_model(3, 2), origin(3))
    assert result.to_json() == {"k": 2, "contact": True, "identically_degenerate": True}

    result = pfaff_class(standard_model(4, 2), origin(4))
    assert result.k == 2 and not result.contact

    result = pfaff_class(standard_model(5, 3), origin(5))
    assert result.k == 3 and result.contact
    assert result.legendrian_dim == 2


def test_pfaff_class_bound_on_random_forms():
    rng = make_rng(31)
    ring = coordinate_ring(default_vars(4))
    checked = 0
    for _ in range(50):
        omega = one_form(ring, random_one_form_coefficients(rng, ring))
        try:
            k = pfaff_class(omega, random_point(rng, 4)).k
        except FormVanishesError:
            continue
        checked += 1
        assert 1 <= k <= (4 + 1) // 2
    assert checked > 0


def test_pfaff_class_is_invariant_under_rescaling():
    rng = make_rng(53)
    ring = coordinate_ring(default_vars(4))
    forms = [standard_model(3, 2), standard_model(4, 2), standard_model(5, 3), convexifiable_model(4, 2)]
    forms += [one_form(ring, random_one_form_coefficients(rng, ring)) for _ in range(10)]
    checked = 0
    for omega in forms:
        x = random_point(rng, omega.n)
        f = random_positive(rng, omega.ring, degree=2)
        try:
            k = pfaff_class(omega, x).k
        except FormVanishesError:
            continue
        checked += 1
        assert pfaff_class(omega.scale(f), x).k == k
        assert pfaff_class(omega.scale(-f), x).k == k
    assert checked >= 4


def test_vanishing_form_is_rejected():
    omega = standard_model(3, 2).scale(Expr.variable(coordinate_ring(default_vars(3)), 0))
    try:
        pfaff_class(omega, origin(3))
        assert False, "expected a vanishing form"
    except FormVanishesError:
        pass


def test_kernel_known_values():
    omega = standard_model(3, 2)
    assert kernel_at(omega, origin(3)).same_span(span(3, unit(3, 2), unit(3, 3)))
    moved = Subspace((0, 0, 5), ((-5, 1, 0), (0, 0, 1)))
    assert kernel_at(omega, (0, 0, 5)).same_span(moved)
    dx1 = standard_model(4, 1)
    assert kernel_at(dx1, origin(4)).same_span(span(4, unit(4, 2), unit(4, 3), unit(4, 4)))


def test_cauchy_known_values():
    assert cauchy_at(standard_model(3, 2), origin(3)).dim == 0
    assert cauchy_at(standard_model(4, 2), origin(4)).same_span(span(4, unit(4, 4)))
    dx1 = standard_model(3, 1)
    assert cauchy_at(dx1, origin(3)).same_span(kernel_at(dx1, origin(3)))


def test_bform_known_values():
    B = bform_at(standard_model(3, 2), origin(3))
    assert B.basis == (unit(3, 2), unit(3, 3))
    assert B.matrix == ((0, -HALF), (HALF, 0))

    basis = [unit(5, 2), unit(5, 3), unit(5, 4), unit(5, 5)]
    B = bform_at(standard_model(5, 3), origin(5), basis)
    assert B.matrix == ((0, -HALF, 0, 0), (HALF, 0, 0, 0), (0, 0, 0, -HALF), (0, 0, HALF, 0))


def test_bform_rejects_class_one():
    try:
        bform_at(standard_model(3, 1), origin(3))
        assert False, "expected an empty pairing error"
    except InvalidInputError:
        pass


def test_bform_scaling_law():
    """B of f omega is f(x) B of omega on the same representatives."""
    rng = make_rng(41)
    for omega in (standard_model(5, 3), convexifiable_model(4, 2)):
        for _ in range(10):
            x = random_point(rng, omega.n)
            f = random_positive(rng, omega.ring)
            B = bform_at(omega, x)
            scaled = bform_at(omega.scale(f), x, B.basis)
            fx = f.evaluate(x)
            assert scaled.matrix == tuple(tuple(fx * v for v in row) for row in B.matrix)


def test_legendrian_chart_is_injective():
    rng = make_rng(43)
    for n, k in ((3, 2), (5, 3)):
        omega = standard_model(n, k)
        assert legendrian_chart(omega, origin(n)).parameter_count == k * (k - 1) // 2
        for _ in range(100):
            S = random_symmetric(rng, k - 1)
            W = sample_legendrian(omega, origin(n), S)
            assert legendrian_coordinates(omega, origin(n), W) == S


def test_symplectic_basis_is_normalized():
    omega = standard_model(5, 3)
    B = bform_at(omega, origin(5))
    e, f = symplectic_basis(B)
    D = d_omega_matrix(omega, origin(5))
    for i in range(2):
        for j in range(2):
            assert bilinear(D, e[i], f[j]) == (1 if i == j else 0)
            assert bilinear(D, e[i], e[j]) == 0
            assert bilinear(D, f[i], f[j]) == 0


def test_is_legendrian_known_values():
    omega = standard_model(3, 2)
    assert is_legendrian(omega, origin(3), span(3, unit(3, 2)))
    assert not is_legendrian(omega, origin(3), span(3, unit(3, 1)))
    omega = standard_model(5, 3)
    assert is_legendrian(omega, origin(5), span(5, unit(5, 2), unit(5, 4)))
    assert not is_legendrian(omega, origin(5), span(5, unit(5, 2), unit(5, 3)))


def test_legendrian_is_invariant_under_rescaling():
    rng = make_rng(47)
    for n, k in ((3, 2), (4, 2), (5, 3)):
        omega = standard_model(n, k)
        x = random_point(rng, n)
        for _ in range(10):
            f = random_positive(rng, omega.ring, degree=2)
            W = sample_legendrian(omega, x, random_symmetric(rng, k - 1))
            assert is_legendrian(omega.scale(f), x, W)
            assert is_legendrian(omega.scale(-f), x, W)
            tilted = Subspace(x, (unit(n, 1),) + W.basis[1:])
            assert not is_legendrian(omega, x, tilted)
            assert not is_legendrian(omega.scale(f), x, tilted)


def test_sample_legendrian_known_values():
    omega = standard_model(5, 3)
    W = sample_legendrian(omega, origin(5), [[0, 0], [0, 0]])
    assert W.same_span(span(5, unit(5, 2), unit(5, 4)))

    omega = standard_model(3, 2)
    for s in (Rational(-1, 2), 0, 3):
        W = sample_legendrian(omega, origin(3), [[s]])
        assert W.same_span(span(3, (0, 1, -2 * s)))
        assert is_legendrian(omega, origin(3), W)
    assert not sample_legendrian(omega, origin(3), [[1]]).same_span(sample_legendrian(omega, origin(3), [[2]]))
    assert legendrian_dimension(standard_model(5, 3), origin(5)) == 3


def test_sample_legendrian_includes_cauchy_space():
    omega = standard_model(4, 2)
    W = sample_legendrian(omega, origin(4), [[1]])
    assert W.dim == 2
    assert W.contains(unit(4, 4))
    assert is_legendrian(omega, origin(4), W)


def test_legendrian_coordinates_invert_sampling():
    rng = make_rng(37)
    omega = standard_model(5, 3)
    for _ in range(5):
        S = random_symmetric(rng, 2)
        W = sample_legendrian(omega, origin(5), S)
        assert legendrian_coordinates(omega, origin(5), W) == S
    W = span(3, (0, 1, 1))
    assert legendrian_coordinates(standard_model(3, 2), origin(3), W) == [[Rational(-1, 2)]]


def test_sample_rejects_asymmetric_parameter():
    try:
        sample_legendrian(standard_model(5, 3), origin(5), [[0, 1], [2, 0]])
        assert False, "expected an asymmetric matrix error"
    except InvalidInputError:
        pass


def test_find_positive_legendrian_flat_model():
    omega = standard_model(3, 2)
    result = find_positive_legendrian(omega, origin(3), Connection.flat(omega.ring), seed=0)
    assert result.status == SEARCH_FOUND
    assert result.samples == 3
    assert result.parameter == [[-1]]
    assert result.matrix == [[2]]
    assert result.subspace.same_span(span(3, (0, 1, 2)))


def test_find_positive_legendrian_higher_class():
    omega = convexifiable_model(5, 3)
    result = find_positive_legendrian(omega, origin(5), Connection.flat(omega.ring), budget=200)
    assert result.found
    assert is_pd(result.matrix)
    assert is_legendrian(omega, origin(5), result.subspace)


def test_find_positive_legendrian_definitely_empty():
    omega = standard_model(3, 2)
    result = find_positive_legendrian(omega, origin(3), negative_connection(omega.ring))
    assert result.status == SEARCH_EMPTY
    assert "K_x" in result.reason

    # S(omega) vanishes on the Cauchy direction d/dx4
    omega = standard_model(4, 2)
    result = find_positive_legendrian(omega, origin(4), Connection.flat(omega.ring))
    assert result.status == SEARCH_EMPTY
    assert "A_x" in result.reason

    omega = convexifiable_model(4, 2)
    assert find_positive_legendrian(omega, origin(4), Connection.flat(omega.ring)).found


def test_find_positive_legendrian_class_one():
    omega = standard_model(3, 1)
    assert find_positive_legendrian(omega, origin(3), Connection.flat(omega.ring)).status == SEARCH_EMPTY
    convex = Connection.from_entries(omega.ring, [(0, 1, 1, 1), (0, 2, 2, 1)])
    result = find_positive_legendrian(omega, origin(3), convex)
    assert result.found and result.samples == 1
    assert result.subspace.same_span(kernel_at(omega, origin(3)))


def test_subspace_json_round_trip():
    W = sample_legendrian(standard_model(5, 3), origin(5), [[1, HALF], [HALF, -2]])
    again = subspace_from_json(W.to_json())
    assert again.same_span(W)
    assert legendrian_chart(standard_model(5, 3), origin(5)).parameter_count == 3


if __name__ == "__main__":
    print("Testing Pfaff linear algebra...")
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
