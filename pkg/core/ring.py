"""
Coordinate polynomial rings over QQ.

A ``Poly`` is a sympy ``PolyElement`` of ``coordinate_ring(vars)``: a sparse
map from dense exponent vectors (length n) to nonzero QQ coefficients.
"""
from functools import lru_cache
from typing import Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from constants import VARIABLE_PREFIX
from exceptions import InvalidInputError


def default_vars(n: int) -> Tuple[str, ...]:
    """The names x1 ... xn."""
    return tuple(f"{VARIABLE_PREFIX}{i}" for i in range(1, n + 1))


@lru_cache(maxsize=None)
def _ring(names: Tuple[str, ...]) -> PolyRing:
    return PolyRing(list(names), QQ, lex)


def coordinate_ring(vars: Sequence[str]) -> PolyRing:
    """The polynomial ring QQ[vars]; identical names give the identical ring."""
    names = tuple(vars)
    if not names:
        raise InvalidInputError("at least one coordinate is required", "variables")
    if len(set(names)) != len(names):
        raise InvalidInputError(f"duplicate variable names in {list(names)}", "variables")
    return _ring(names)


def ring_names(ring: PolyRing) -> Tuple[str, ...]:
    return tuple(str(s) for s in ring.symbols)


def poly_eval(p, values) -> object:
    """Evaluate a PolyElement at QQ values; returns a QQ element."""
    total = QQ.zero
    for monom, coeff in p.items():
        term = coeff
        for v, e in zip(values, monom):
            if e:
                term = term * v ** e
        total += term
    return total


def poly_eval_float(p, values) -> float:
    total = 0.0
    for monom, coeff in p.items():
        term = float(coeff.numerator) / float(coeff.denominator)
        for v, e in zip(values, monom):
            if e:
                term *= v ** e
        total += term
    return total


def _format_coefficient(c) -> str:
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_poly(p) -> str:
    """Grammar-conformant text: terms joined by + / -, powers written with ^."""
    if not p:
        return "0"
    names = ring_names(p.ring)
    pieces = []
    for monom, coeff in sorted(p.items(), key=lambda item: item[0], reverse=True):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        factors = []
        for name, e in zip(names, monom):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = _format_coefficient(magnitude)
        elif magnitude == 1 and not (negative and not pieces and "^" in factors[0]):
            body = "*".join(factors)
        else:
            body = "*".join([_format_coefficient(magnitude)] + factors)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
