"""
Bundled models and the fixture corpus.

standard_model(n, k) is dx1 + x3 dx2 + x5 dx4 + ... with the remaining
coordinates unused. convexifiable_model(n, k) adds sum_j x_j dx_j over those
coordinates so that S(omega) is positive along the Cauchy directions under
the flat connection; its chart folds them into y1 = x1 + 1/2 sum_j x_j^2.
"""
from dataclasses import dataclass, field
from typing import List

from sympy import Rational

from config import settings
from connection.christoffel import Connection
from core.expr import Expr
from core.rational import to_matrix, to_point
from core.ring import coordinate_ring, default_vars
from darboux.chart import SeedChart
from darboux.generating import chart_from_generating_function
from exceptions import InvalidInputError
from forms.normal_form import model_coordinates
from forms.pform import PForm
from shared.sampling import make_rng, random_christoffel_entries


def _check_size(n: int, k: int):
    if k < 1 or 2 * k - 1 > n:
        raise InvalidInputError(f"need 1 <= k and 2k - 1 <= n, got n={n}, k={k}", "model")


def _coordinates(n: int) -> List[Expr]:
    ring = coordinate_ring(default_vars(n))
    return [Expr.variable(ring, i) for i in range(n)]


def standard_model(n: int, k: int) -> PForm:
    """dx1 + x3 dx2 + ... + x_{2k-1} dx_{2k-2} on R^n."""
    _check_size(n, k)
    xs = _coordinates(n)
    y_idx, p_idx = model_coordinates(k)
    omega = PForm.exact(xs[0])
    for yi, pi in zip(y_idx[1:], p_idx):
        omega = omega + PForm.exact(xs[yi]).scale(xs[pi])
    return omega


def standard_seed_chart(n: int, k: int) -> SeedChart:
    """a = 1, y = (x1, x2, x4, ...), p = (x3, x5, ...) at the origin."""
    _check_size(n, k)
    xs = _coordinates(n)
    y_idx, p_idx = model_coordinates(k)
    return SeedChart(k=k, base=(0,) * n, a=Expr.one(xs[0].ring),
                     y=tuple(xs[i] for i in y_idx), p=tuple(xs[i] for i in p_idx))


def convexifiable_model(n: int, k: int) -> PForm:
    omega = standard_model(n, k)
    xs = _coordinates(n)
    for j in range(2 * k - 1, n):
        omega = omega + PForm.exact(xs[j]).scale(xs[j])
    return omega


def convexifiable_seed_chart(n: int, k: int) -> SeedChart:
    chart = standard_seed_chart(n, k)
    xs = _coordinates(n)
    y1 = chart.y[0]
    for j in range(2 * k - 1, n):
        y1 = y1 + xs[j] * xs[j] * Rational(1, 2)
    return chart.with_functions(y=(y1,) + chart.y[1:])


def shifted_seed_chart(n: int, k: int, base) -> SeedChart:
    """
    The convexifiable chart moved to vanish at base:
    y1 = x1 - b1 + sum_i b_pi (x_yi - b_yi) + 1/2 sum_j (x_j^2 - b_j^2),
    y_i = x_yi - b_yi, p_i = x_pi - b_pi.
    """
    _check_size(n, k)
    base = to_point(base)
    if len(base) != n:
        raise InvalidInputError(f"base point must have {n} coordinates, got {len(base)}", "model")
    xs = _coordinates(n)
    y_idx, p_idx = model_coordinates(k)
    y1 = xs[0] - base[0]
    for yi, pi in zip(y_idx[1:], p_idx):
        y1 = y1 + (xs[yi] - base[yi]) * base[pi]
    for j in range(2 * k - 1, n):
        y1 = y1 + (xs[j] * xs[j] - base[j] ** 2) * Rational(1, 2)
    tail = [xs[i] - base[i] for i in y_idx[1:]]
    p = [xs[i] - base[i] for i in p_idx]
    return SeedChart(k=k, base=base, a=Expr.one(xs[0].ring), y=(y1,) + tuple(tail), p=tuple(p))


def negative_connection(ring) -> Connection:
    """Gamma^1_22 = Gamma^1_33 = -1, Gamma^1_23 = -1/2; S(omega) is negative definite on ker omega for the n=3 model."""
    return Connection.from_entries(ring, [
        (0, 1, 1, -1),
        (0, 2, 2, -1),
        (0, 1, 2, Rational(-1, 2)),
    ])


@dataclass
class FixtureCase:
    name: str
    omega: PForm
    connection: Connection
    seed_chart: SeedChart
    S0: List[List[Rational]]
    chart: SeedChart = field(default=None)

    def __post_init__(self):
        if self.chart is None:
            self.chart = chart_from_generating_function(self.omega, self.seed_chart, self.S0)

    @property
    def n(self) -> int:
        return self.omega.n

    @property
    def k(self) -> int:
        return self.seed_chart.k


# (n, k, S0, random connections)
_CORPUS_SHAPES = (
    (3, 2, [[1]], 5),
    (4, 2, [[1]], 2),
    (5, 3, [[1, 0], [0, 1]], 2),
)


def fixture_corpus(seed: int = None) -> List[FixtureCase]:
    """
    Flat and randomly perturbed (|Gamma| <= 1/16) cases for n = 3, 4, 5, plus
    an n = 3 case based at (1, 2, 3) and one with a = 1 - x2 + x3^2.
    """
    rng = make_rng(settings.DEFAULT_SEED if seed is None else seed)
    cases = []
    for n, k, S0, perturbed in _CORPUS_SHAPES:
        omega = convexifiable_model(n, k)
        chart = convexifiable_seed_chart(n, k)
        S0 = to_matrix(S0)
        cases.append(FixtureCase(f"n{n}_flat", omega, Connection.flat(omega.ring), chart, S0))
        for index in range(perturbed):
            connection = Connection.from_entries(omega.ring, random_christoffel_entries(rng, n))
            cases.append(FixtureCase(f"n{n}_gamma{index + 1}", omega, connection, chart, S0))

    omega = convexifiable_model(3, 2)
    flat = Connection.flat(omega.ring)
    shifted = shifted_seed_chart(3, 2, (1, 2, 3))
    cases.append(FixtureCase("n3_shifted_base", omega, flat, shifted, [[Rational(1)]]))

    seed_chart = convexifiable_seed_chart(3, 2)
    a = Expr.one(omega.ring) - _coordinates(3)[1] + _coordinates(3)[2] ** 2
    generated = chart_from_generating_function(omega, seed_chart, [[1]])
    cases.append(FixtureCase("n3_variable_factor", omega.scale(a), flat, seed_chart, [[Rational(1)]],
                             chart=generated.with_functions(a=a)))
    return cases
