"""
The constant in the normal-form volume identity

    omega ^ (d omega)^(k-1) = lambda_k * a^k * dy1 ^ ... ^ dyk ^ dp2 ^ ... ^ dpk

computed once per k on the model dx1 + x3 dx2 + x5 dx4 + ... (n = 2k - 1).
"""
from functools import lru_cache
from math import factorial
from typing import List, Sequence, Tuple

from sympy import Rational

from core.expr import Expr
from core.ring import coordinate_ring, default_vars
from exceptions import InvalidInputError
from forms.alt_tensor import eval_form
from forms.pform import PForm, wedge_all


def model_coordinates(k: int) -> Tuple[List[int], List[int]]:
    """0-based positions of (y1..yk) and (p2..pk) in the model: y = x1, x2, x4, ...; p = x3, x5, ..."""
    y = [0] + [2 * i - 3 for i in range(2, k + 1)]
    p = [2 * i - 2 for i in range(2, k + 1)]
    return y, p


def volume_form(y: Sequence[Expr], p: Sequence[Expr]) -> PForm:
    """dy1 ^ ... ^ dyk ^ dp2 ^ ... ^ dpk."""
    functions = list(y) + list(p)
    ring = functions[0].ring
    return wedge_all([PForm.exact(f) for f in functions], ring)


def class_form(omega: PForm, k: int) -> PForm:
    """omega ^ (d omega)^(k-1)."""
    return omega.wedge(omega.d().power(k - 1))


@lru_cache(maxsize=None)
def normal_form_constant(k: int) -> Tuple[Rational, Rational]:
    """
    (storage, evaluated) values of lambda_k.

    storage is the coefficient ratio in the standard expansion, equal to
    (-1)^(k(k-1)/2) (k-1)!; evaluated is the value of omega ^ (d omega)^(k-1) on
    the ordered frame dual to (y, p), which differs by the factor 1/(2k-1)!.
    """
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}", "normal form")
    n = 2 * k - 1
    ring = coordinate_ring(default_vars(n))
    xs = [Expr.variable(ring, i) for i in range(n)]
    y_idx, p_idx = model_coordinates(k)
    omega = PForm.exact(xs[0])
    for yi, pi in zip(y_idx[1:], p_idx):
        omega = omega + PForm.exact(xs[yi]).scale(xs[pi])
    top = class_form(omega, k)
    volume = volume_form([xs[i] for i in y_idx], [xs[i] for i in p_idx])
    full = tuple(range(n))
    origin = [0] * n
    storage = top.coefficient(full).evaluate(origin) / volume.coefficient(full).evaluate(origin)

    frame = [[1 if j == i else 0 for j in range(n)] for i in y_idx + p_idx]
    evaluated = eval_form(top, origin)(*frame)
    return Rational(storage), evaluated


def conversion_factor(k: int) -> Rational:
    """evaluated / storage for forms of top degree 2k - 1."""
    return Rational(1, factorial(2 * k - 1))
