"""
Exact multivariate rational functions over QQ.

An ``Expr`` is a pair (num, den) of polynomials in one coordinate ring.
Normalization is lazy: no gcd is taken on arithmetic, only constant
denominators are folded into the numerator and equal denominators are
reused on addition. Equality is decided by cross-multiplication.
"""
from typing import Sequence, Union

from sympy import Rational
from sympy.polys.domains import QQ

from core.rational import RationalLike, from_qq, to_qq
from core.ring import format_poly, poly_eval, poly_eval_float
from exceptions import DimensionMismatchError, ExprError, PoleError

Scalar = Union[int, Rational, "Expr"]


class Expr:
    """Immutable rational function num/den with den != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        ring = num.ring
        if den is None:
            den = ring.one
        elif den.ring != ring:
            raise DimensionMismatchError(ring.ngens, den.ring.ngens, "coordinate ring")
        if not den:
            raise ExprError("denominator is the zero polynomial")
        if den.is_ground:
            c = den.get(ring.zero_monom, QQ.zero)
            if c != 1:
                num = num.mul_ground(QQ.one / c)
            den = ring.one
        if not num:
            den = ring.one
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Expr is immutable")

    # -- construction -------------------------------------------------
    @classmethod
    def constant(cls, ring, value: RationalLike) -> "Expr":
        return cls(ring.ground_new(to_qq(value)))

    @classmethod
    def variable(cls, ring, index: int) -> "Expr":
        """The coordinate function x_{index+1} (0-based index)."""
        return cls(ring.gens[index])

    @classmethod
    def zero(cls, ring) -> "Expr":
        return cls(ring.zero)

    @classmethod
    def one(cls, ring) -> "Expr":
        return cls(ring.one)

    @property
    def ring(self):
        return self.num.ring

    @property
    def nvars(self) -> int:
        return self.num.ring.ngens

    # -- coercion -----------------------------------------------------
    def _coerce(self, other) -> "Expr":
        if isinstance(other, Expr):
            if other.ring != self.ring:
                raise DimensionMismatchError(self.nvars, other.nvars, "coordinate ring")
            return other
        return Expr.constant(self.ring, other)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "Expr":
        other = self._coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return Expr(self.num + other.num, self.den)
        return Expr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "Expr":
        return Expr(-self.num, self.den)

    def __sub__(self, other) -> "Expr":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Expr":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Expr":
        other = self._coerce(other)
        if not self.num or not other.num:
            return Expr.zero(self.ring)
        if other.den == self.num:
            return Expr(other.num, self.den)
        if self.den == other.num:
            return Expr(self.num, other.den)
        return Expr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Expr":
        if not self.num:
            raise ExprError("division by the zero rational function")
        return Expr(self.den, self.num)

    def __truediv__(self, other) -> "Expr":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "Expr":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Expr":
        if not isinstance(exponent, int):
            raise ExprError(f"only integer powers are supported, got {exponent!r}")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Expr(self.num ** exponent, self.den ** exponent)

    # -- calculus -----------------------------------------------------
    def diff(self, index: int) -> "Expr":
        """Partial derivative in coordinate x_{index+1} (0-based index)."""
        if not 0 <= index < self.nvars:
            raise DimensionMismatchError(f"0..{self.nvars - 1}", index, "variable index")
        x = self.ring.gens[index]
        dnum = self.num.diff(x)
        if self.den == self.ring.one:
            return Expr(dnum)
        dden = self.den.diff(x)
        if not dden:
            return Expr(dnum, self.den)
        return Expr(dnum * self.den - self.num * dden, self.den ** 2)

    def gradient(self):
        return tuple(self.diff(i) for i in range(self.nvars))

    # -- evaluation ---------------------------------------------------
    def evaluate(self, point: Sequence[RationalLike]) -> Rational:
        if len(point) != self.nvars:
            raise DimensionMismatchError(self.nvars, len(point), "point dimension")
        values = [to_qq(v) for v in point]
        return self.evaluate_qq(values, point)

    def evaluate_qq(self, values, point=None) -> Rational:
        """Evaluate at pre-converted QQ values (hot loops)."""
        d = poly_eval(self.den, values)
        if d == 0:
            raise PoleError(point if point is not None else [from_qq(v) for v in values])
        return from_qq(poly_eval(self.num, values) / d)

    def evaluate_float(self, point: Sequence[float]) -> float:
        values = [float(v) for v in point]
        return poly_eval_float(self.num, values) / poly_eval_float(self.den, values)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    def equals(self, other) -> bool:
        other = self._coerce(other)
        return self.num * other.den == other.num * self.den

    def __eq__(self, other) -> bool:
        if isinstance(other, (Expr, int, Rational)):
            return self.equals(other)
        return NotImplemented

    __hash__ = None

    # -- display ------------------------------------------------------
    def cancel(self) -> "Expr":
        """Explicit gcd reduction; only used for display and serialization."""
        if self.den == self.ring.one:
            return self
        num, den = self.num.cancel(self.den)
        return Expr(num, den)

    def to_string(self) -> str:
        reduced = self.cancel()
        if reduced.den == reduced.ring.one:
            return format_poly(reduced.num)
        num_text = format_poly(reduced.num)
        if len(reduced.num) > 1:
            num_text = f"({num_text})"
        return f"{num_text}/({format_poly(reduced.den)})"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Expr({self.to_string()!r})"


def diff(e: Expr, i: int) -> Expr:
    """Partial derivative in x_i (1-based index, as in x1 ... xn)."""
    return e.diff(i - 1)


def evaluate(e: Expr, point: Sequence[RationalLike]) -> Rational:
    return e.evaluate(point)


def equal(e1: Expr, e2: Expr) -> bool:
    return e1.equals(e2)


def eval_float(e: Expr, point: Sequence[float]) -> float:
    return e.evaluate_float(point)


def format_expr(e: Expr) -> str:
    return e.to_string()
