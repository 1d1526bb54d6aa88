"""
Symmetric (0,2)-forms with Expr entries, general (0,2)-tensors, and their
restriction to subspaces at a point.
"""
from typing import List, Sequence

from sympy import Rational

from core.expr import Expr
from core.linalg import gram
from core.rational import RationalLike, to_qq
from exceptions import DimensionMismatchError, InvalidInputError, PoleError
from forms.pform import PForm


class SymForm:
    """Q = sum Q_ij dx^i dx^j with Q_ij = Q_ji; only the upper triangle is stored."""

    def __init__(self, ring, matrix: Sequence[Sequence[Expr]], check: bool = True):
        n = ring.ngens
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise DimensionMismatchError(n, len(matrix), "symmetric form size")
        if check:
            for i in range(n):
                for j in range(i + 1, n):
                    if not _as_expr(ring, matrix[i][j]).equals(_as_expr(ring, matrix[j][i])):
                        raise InvalidInputError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ",
                                                "symmetric form")
        self.ring = ring
        self.n = n
        self._upper = [[_as_expr(ring, matrix[i][j]) for j in range(i, n)] for i in range(n)]

    @classmethod
    def zero(cls, ring) -> "SymForm":
        z = Expr.zero(ring)
        return cls(ring, [[z] * ring.ngens for _ in range(ring.ngens)], check=False)

    def entry(self, i: int, j: int) -> Expr:
        if i > j:
            i, j = j, i
        return self._upper[i][j - i]

    def matrix(self) -> List[List[Expr]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def __add__(self, other: "SymForm") -> "SymForm":
        self._check(other)
        return SymForm(self.ring, [[self.entry(i, j) + other.entry(i, j) for j in range(self.n)]
                                   for i in range(self.n)], check=False)

    def __sub__(self, other: "SymForm") -> "SymForm":
        return self + other.scale(-1)

    def scale(self, factor) -> "SymForm":
        return SymForm(self.ring, [[self.entry(i, j) * factor for j in range(self.n)]
                                   for i in range(self.n)], check=False)

    def equals(self, other: "SymForm") -> bool:
        self._check(other)
        return all(self.entry(i, j).equals(other.entry(i, j))
                   for i in range(self.n) for j in range(i, self.n))

    def _check(self, other):
        if not isinstance(other, SymForm) or other.ring != self.ring:
            raise DimensionMismatchError(self.n, getattr(other, "n", None), "symmetric form")

    def evaluate(self, point: Sequence[RationalLike]) -> List[List[Rational]]:
        """The symmetric rational matrix Q(x); raises PoleError."""
        if len(point) != self.n:
            raise DimensionMismatchError(self.n, len(point), "point dimension")
        values = [to_qq(v) for v in point]
        try:
            upper = [[e.evaluate_qq(values) for e in row] for row in self._upper]
        except PoleError:
            raise PoleError(point)
        return [[upper[min(i, j)][abs(j - i)] for j in range(self.n)] for i in range(self.n)]

    def __repr__(self) -> str:
        return f"SymForm(n={self.n})"


class CovariantTensor:
    """A general (0,2)-tensor T_ik with Expr entries."""

    def __init__(self, ring, matrix: Sequence[Sequence[Expr]]):
        n = ring.ngens
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise DimensionMismatchError(n, len(matrix), "tensor size")
        self.ring = ring
        self.n = n
        self.entries = [[_as_expr(ring, v) for v in row] for row in matrix]

    def symmetric_part(self) -> SymForm:
        half = Rational(1, 2)
        T = self.entries
        return SymForm(self.ring, [[(T[i][k] + T[k][i]) * half for k in range(self.n)]
                                   for i in range(self.n)], check=False)

    def antisymmetric_part(self) -> List[List[Expr]]:
        half = Rational(1, 2)
        T = self.entries
        return [[(T[i][k] - T[k][i]) * half for k in range(self.n)] for i in range(self.n)]


def _as_expr(ring, value) -> Expr:
    return value if isinstance(value, Expr) else Expr.constant(ring, value)


def symmetric_product(alpha: PForm, beta: PForm) -> SymForm:
    """alpha o beta with (alpha o beta)_ij = 1/2 (alpha_i beta_j + alpha_j beta_i)."""
    if alpha.p != 1 or beta.p != 1:
        raise DimensionMismatchError(1, (alpha.p, beta.p), "form degree")
    a, b = alpha.dense(), beta.dense()
    half = Rational(1, 2)
    n = alpha.n
    return SymForm(alpha.ring, [[(a[i] * b[j] + a[j] * b[i]) * half for j in range(n)]
                                for i in range(n)], check=False)


def restrict_form(Q: SymForm, W) -> List[List[Rational]]:
    """[Q(x)(w_a, w_b)] over the basis of a subspace W based at x."""
    if not W.basis:
        return []
    return gram(Q.evaluate(W.base), W.basis)


def restrict_matrix(matrix: Sequence[Sequence[Rational]], basis) -> List[List[Rational]]:
    """The same restriction for an already evaluated matrix."""
    return gram(matrix, basis) if basis else []
