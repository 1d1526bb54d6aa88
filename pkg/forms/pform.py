"""
Differential p-forms with Expr coefficients.

Coefficients are stored on strictly increasing 0-based index tuples in the
standard exterior-algebra expansion (dx_i ^ dx_j for i < j carries weight 1).
Only pointwise evaluation (see alt_tensor) applies the averaged 1/p! weight.
"""
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from core.expr import Expr
from core.rational import RationalLike, to_qq
from exceptions import DimensionMismatchError, InvalidInputError, PoleError

Indices = Tuple[int, ...]


def merge_sign(first: Indices, second: Indices) -> int:
    """Sign of the permutation sorting first + second; 0 if they share an index."""
    inversions = 0
    for a in first:
        for b in second:
            if a == b:
                return 0
            if a > b:
                inversions += 1
    return -1 if inversions % 2 else 1


class PForm:
    """A p-form sum_I f_I dx_I on an n-dimensional coordinate domain."""

    __slots__ = ("ring", "n", "p", "coeffs")

    def __init__(self, ring, p: int, coeffs: Mapping[Indices, Expr] = None):
        n = ring.ngens
        if p < 0:
            raise DimensionMismatchError(f"0..{n}", p, "form degree")
        # degree > n is allowed for the zero form only; no index tuple can fit
        cleaned: Dict[Indices, Expr] = {}
        for indices, coeff in (coeffs or {}).items():
            indices = tuple(indices)
            if len(indices) != p:
                raise DimensionMismatchError(p, len(indices), "index tuple length")
            if any(b <= a for a, b in zip(indices, indices[1:])):
                raise InvalidInputError(f"index tuple {indices} is not strictly increasing", "form")
            if any(not 0 <= i < n for i in indices):
                raise DimensionMismatchError(f"0..{n - 1}", indices, "form index")
            if not isinstance(coeff, Expr):
                coeff = Expr.constant(ring, coeff)
            elif coeff.ring != ring:
                raise DimensionMismatchError(n, coeff.nvars, "coordinate ring")
            if not coeff.is_zero():
                cleaned[indices] = coeff
        self.ring = ring
        self.n = n
        self.p = p
        self.coeffs = cleaned

    # -- construction -------------------------------------------------
    @classmethod
    def zero(cls, ring, p: int) -> "PForm":
        return cls(ring, p)

    @classmethod
    def function(cls, f: Expr) -> "PForm":
        """The 0-form f."""
        return cls(f.ring, 0, {(): f})

    @classmethod
    def basis(cls, ring, indices: Iterable[int]) -> "PForm":
        """dx_{i1} ^ ... ^ dx_{ip} for 0-based indices in any order."""
        indices = list(indices)
        if len(set(indices)) != len(indices):
            return cls.zero(ring, len(indices))
        order = sorted(range(len(indices)), key=lambda a: indices[a])
        inversions = sum(1 for a in range(len(order)) for b in range(a + 1, len(order)) if order[a] > order[b])
        sign = -1 if inversions % 2 else 1
        return cls(ring, len(indices), {tuple(sorted(indices)): Expr.constant(ring, sign)})

    @classmethod
    def one_form(cls, ring, coeffs: Sequence) -> "PForm":
        """sum_j f_j dx_j from a dense coefficient list of length n."""
        if len(coeffs) != ring.ngens:
            raise DimensionMismatchError(ring.ngens, len(coeffs), "1-form coefficient count")
        return cls(ring, 1, {(j,): f for j, f in enumerate(coeffs)})

    @classmethod
    def exact(cls, f: Expr) -> "PForm":
        """df."""
        return cls.one_form(f.ring, list(f.gradient()))

    # -- access -------------------------------------------------------
    def coefficient(self, indices: Indices) -> Expr:
        return self.coeffs.get(tuple(indices), Expr.zero(self.ring))

    def dense(self) -> Tuple[Expr, ...]:
        """Coefficient list of a 1-form, (f_1, ..., f_n)."""
        if self.p != 1:
            raise DimensionMismatchError(1, self.p, "form degree")
        return tuple(self.coefficient((j,)) for j in range(self.n))

    def terms(self):
        return sorted(self.coeffs.items())

    # -- algebra ------------------------------------------------------
    def _check(self, other: "PForm", same_degree: bool = True):
        if not isinstance(other, PForm):
            raise InvalidInputError(f"expected a form, got {type(other).__name__}", "form")
        if other.ring != self.ring:
            raise DimensionMismatchError(self.n, other.n, "coordinate ring")
        if same_degree and other.p != self.p:
            raise DimensionMismatchError(self.p, other.p, "form degree")

    def __add__(self, other: "PForm") -> "PForm":
        self._check(other)
        coeffs = dict(self.coeffs)
        for indices, coeff in other.coeffs.items():
            coeffs[indices] = coeffs[indices] + coeff if indices in coeffs else coeff
        return PForm(self.ring, self.p, coeffs)

    def __neg__(self) -> "PForm":
        return PForm(self.ring, self.p, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "PForm") -> "PForm":
        return self + (-other)

    def scale(self, factor) -> "PForm":
        """f * alpha for a function (Expr) or constant f."""
        if isinstance(factor, Expr) and factor.ring != self.ring:
            raise DimensionMismatchError(self.n, factor.nvars, "coordinate ring")
        return PForm(self.ring, self.p, {i: c * factor for i, c in self.coeffs.items()})

    def __mul__(self, factor) -> "PForm":
        if isinstance(factor, PForm):
            return self.wedge(factor)
        return self.scale(factor)

    __rmul__ = scale

    def wedge(self, other: "PForm") -> "PForm":
        self._check(other, same_degree=False)
        degree = self.p + other.p
        if degree > self.n:
            return PForm.zero(self.ring, degree)
        coeffs: Dict[Indices, Expr] = {}
        for left, f in self.coeffs.items():
            for right, g in other.coeffs.items():
                sign = merge_sign(left, right)
                if not sign:
                    continue
                key = tuple(sorted(left + right))
                term = f * g if sign > 0 else -(f * g)
                coeffs[key] = coeffs[key] + term if key in coeffs else term
        return PForm(self.ring, degree, coeffs)

    __xor__ = wedge

    def power(self, m: int) -> "PForm":
        """alpha ^ ... ^ alpha (m factors); the constant 1 for m = 0."""
        if m < 0:
            raise InvalidInputError(f"negative wedge power {m}", "form")
        result = PForm.function(Expr.one(self.ring))
        for _ in range(m):
            result = result.wedge(self)
        return result

    def d(self) -> "PForm":
        """Exterior derivative; the zero form when p = n."""
        if self.p >= self.n:
            return PForm.zero(self.ring, self.p + 1)
        coeffs: Dict[Indices, Expr] = {}
        for indices, f in self.coeffs.items():
            for i in range(self.n):
                if i in indices:
                    continue
                df = f.diff(i)
                if df.is_zero():
                    continue
                below = sum(1 for a in indices if a < i)
                key = tuple(sorted(indices + (i,)))
                term = -df if below % 2 else df
                coeffs[key] = coeffs[key] + term if key in coeffs else term
        return PForm(self.ring, self.p + 1, coeffs)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs.values())

    def equals(self, other: "PForm") -> bool:
        self._check(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(k).equals(other.coefficient(k)) for k in keys)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PForm):
            return NotImplemented
        return self.ring == other.ring and self.p == other.p and self.equals(other)

    __hash__ = None

    # -- evaluation ---------------------------------------------------
    def evaluate_coefficients(self, point: Sequence[RationalLike]) -> Dict[Indices, object]:
        """Coefficient values at a point (sympy Rationals); raises PoleError."""
        if len(point) != self.n:
            raise DimensionMismatchError(self.n, len(point), "point dimension")
        values = [to_qq(v) for v in point]
        try:
            return {i: c.evaluate_qq(values) for i, c in self.coeffs.items()}
        except PoleError:
            raise PoleError(point)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        names = [str(s) for s in self.ring.symbols]
        parts = []
        for indices, coeff in self.terms():
            basis = "^".join(f"d{names[i]}" for i in indices)
            text = str(coeff)
            if not basis:
                parts.append(text)
            elif text == "1":
                parts.append(basis)
            else:
                parts.append(f"({text})*{basis}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PForm(p={self.p}, {self})"


def wedge(alpha: PForm, beta: PForm) -> PForm:
    return alpha.wedge(beta)


def d(alpha: PForm) -> PForm:
    return alpha.d()


def exact(f: Expr) -> PForm:
    return PForm.exact(f)


def one_form(ring, coeffs: Sequence) -> PForm:
    return PForm.one_form(ring, coeffs)


def scale(f, alpha: PForm) -> PForm:
    return alpha.scale(f)


def wedge_all(forms: Iterable[PForm], ring) -> PForm:
    """alpha_1 ^ ... ^ alpha_m in order; the constant 1 for an empty list."""
    result = PForm.function(Expr.one(ring))
    for alpha in forms:
        result = result.wedge(alpha)
    return result
