"""
Exact rational scalars.

Points, matrices and certificate constants use sympy ``Rational`` (always
reduced, positive denominator). Polynomial coefficients live in the
ground domain ``QQ``; the helpers below convert between the two.
"""
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import Integer, Rational
from sympy.polys.domains import QQ

from exceptions import InvalidInputError

RationalLike = Union[int, str, Fraction, Rational]


def to_rational(value: RationalLike) -> Rational:
    """Parse an int, a "p/q" string, a Fraction or a sympy number into a Rational."""
    if isinstance(value, bool):
        raise InvalidInputError(f"boolean {value!r} is not a rational", "rational")
    if isinstance(value, float):
        raise InvalidInputError(f"float {value!r} is not an exact rational", "rational")
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                p, q = int(num), int(den)
            except ValueError:
                raise InvalidInputError(f"'{value}' is not of the form p/q", "rational")
            if q == 0:
                raise InvalidInputError(f"zero denominator in '{value}'", "rational")
            return Rational(p, q)
        try:
            return Integer(int(text))
        except ValueError:
            raise InvalidInputError(f"'{value}' is not an integer or p/q", "rational")
    try:
        result = Rational(value)
    except (TypeError, ValueError):
        raise InvalidInputError(f"{value!r} is not a rational", "rational")
    if not result.is_Rational:
        raise InvalidInputError(f"{value!r} is not a rational", "rational")
    return result


def format_rational(value: RationalLike) -> str:
    """Serialize as "p/q", or "p" for integers."""
    r = to_rational(value)
    if r.q == 1:
        return str(int(r.p))
    return f"{int(r.p)}/{int(r.q)}"


def to_point(values: Iterable[RationalLike]) -> Tuple[Rational, ...]:
    return tuple(to_rational(v) for v in values)


def to_qq(value: RationalLike):
    """Convert to a ground-domain element of QQ."""
    r = to_rational(value)
    return QQ(int(r.p), int(r.q))


def from_qq(value) -> Rational:
    """Convert a QQ ground element back to a sympy Rational."""
    return Rational(int(value.numerator), int(value.denominator))


def to_matrix(rows: Sequence[Sequence[RationalLike]]) -> List[List[Rational]]:
    return [[to_rational(v) for v in row] for row in rows]


def format_matrix(rows) -> List[List[str]]:
    return [[format_rational(v) for v in row] for row in rows]
