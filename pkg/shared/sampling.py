"""
Seeded random generation of exact objects.

Every randomized search and every randomized test draws from a numpy
``Generator`` created here, so results depend only on the seed.
"""
from typing import List, Sequence, Tuple

import numpy as np
from sympy import Rational

from config import settings
from core.expr import Expr


def make_rng(seed: int = None) -> np.random.Generator:
    return np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)


def random_rational(rng: np.random.Generator, numerator_bound: int = None,
                    denominator_bound: int = None) -> Rational:
    """p/q with |p| <= numerator_bound and 1 <= q <= denominator_bound."""
    top = settings.RANDOM_NUMERATOR_BOUND if numerator_bound is None else numerator_bound
    bottom = settings.RANDOM_DENOMINATOR_BOUND if denominator_bound is None else denominator_bound
    return Rational(int(rng.integers(-top, top + 1)), int(rng.integers(1, bottom + 1)))


def random_point(rng: np.random.Generator, n: int, numerator_bound: int = 3,
                 denominator_bound: int = 4) -> Tuple[Rational, ...]:
    return tuple(random_rational(rng, numerator_bound, denominator_bound) for _ in range(n))


def random_symmetric(rng: np.random.Generator, m: int, numerator_bound: int = None,
                     denominator_bound: int = None) -> List[List[Rational]]:
    S = [[Rational(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            S[i][j] = S[j][i] = random_rational(rng, numerator_bound, denominator_bound)
    return S


def random_polynomial(rng: np.random.Generator, ring, degree: int = 2, terms: int = 4,
                      numerator_bound: int = 5, denominator_bound: int = 3) -> Expr:
    """A sum of ``terms`` random monomials of total degree <= degree."""
    n = ring.ngens
    result = Expr.zero(ring)
    for _ in range(terms):
        monomial = Expr.constant(ring, random_rational(rng, numerator_bound, denominator_bound))
        for _ in range(int(rng.integers(0, degree + 1))):
            monomial = monomial * Expr.variable(ring, int(rng.integers(0, n)))
        result = result + monomial
    return result


def random_positive(rng: np.random.Generator, ring, degree: int = 1) -> Expr:
    """c + sum_i (x_i - t_i)^2 style function with c > 0; nonvanishing everywhere."""
    n = ring.ngens
    result = Expr.constant(ring, Rational(int(rng.integers(1, 5)), int(rng.integers(1, 4))))
    for _ in range(degree):
        i = int(rng.integers(0, n))
        shift = Expr.variable(ring, i) - random_rational(rng, 2, 2)
        result = result + shift * shift
    return result


def random_rational_function(rng: np.random.Generator, ring, degree: int = 2) -> Expr:
    """A random polynomial over a random positive denominator."""
    return random_polynomial(rng, ring, degree) / random_positive(rng, ring)


def random_one_form_coefficients(rng: np.random.Generator, ring, degree: int = 2) -> List[Expr]:
    return [random_polynomial(rng, ring, degree) for _ in range(ring.ngens)]


def random_christoffel_entries(rng: np.random.Generator, n: int, count: int = 4,
                               denominator: int = 16) -> List[Tuple[int, int, int, Rational]]:
    """Constant symbols with |Gamma| <= 1/denominator at ``count`` random (k, i <= j) slots."""
    entries = {}
    for _ in range(count):
        k = int(rng.integers(0, n))
        i, j = sorted(int(v) for v in rng.integers(0, n, size=2))
        entries[(k, i, j)] = Rational(int(rng.integers(-1, 2)), denominator)
    return [(k, i, j, value) for (k, i, j), value in sorted(entries.items())]


def ball_offsets(rng: np.random.Generator, n: int, count: int,
                 denominator: int = None) -> List[Tuple[Rational, ...]]:
    """``count`` offsets in the cube [-1, 1]^n on the grid 1/denominator."""
    grid = settings.SAMPLE_DENOMINATOR if denominator is None else denominator
    raw = rng.integers(-grid, grid + 1, size=(count, n))
    return [tuple(Rational(int(v), grid) for v in row) for row in raw]


def shift_point(base: Sequence[Rational], offset: Sequence[Rational], radius: Rational) -> Tuple[Rational, ...]:
    return tuple(b + radius * o for b, o in zip(base, offset))
