"""
Pointwise linear objects: subspaces of T_xM and skew forms on K_x / A_x.
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from sympy import Matrix, Rational

from core.linalg import Vector, is_independent, rank, same_span
from core.rational import RationalLike, format_rational, to_point
from exceptions import DimensionMismatchError, InvalidInputError


@dataclass(frozen=True)
class Subspace:
    """span(basis) inside the tangent space at ``base``."""
    base: Vector
    basis: Tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", to_point(self.base))
        object.__setattr__(self, "basis", tuple(to_point(v) for v in self.basis))
        for v in self.basis:
            if len(v) != self.n:
                raise DimensionMismatchError(self.n, len(v), "subspace vector dimension")
        if not is_independent(self.basis):
            raise InvalidInputError("basis vectors are linearly dependent", "subspace")

    @classmethod
    def zero(cls, base: Sequence[RationalLike]) -> "Subspace":
        return cls(tuple(base), ())

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[RationalLike]) -> bool:
        v = to_point(v)
        return rank(list(self.basis) + [v]) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def same_span(self, other: "Subspace") -> bool:
        return self.base == other.base and same_span(self.basis, other.basis)

    def based_at(self, point: Sequence[RationalLike]) -> bool:
        return self.base == to_point(point)

    def to_json(self) -> Dict[str, Any]:
        return {
            "base": [format_rational(v) for v in self.base],
            "basis": [[format_rational(c) for c in v] for v in self.basis],
        }


def subspace_from_json(data: Dict[str, Any]) -> Subspace:
    try:
        return Subspace(tuple(data["base"]), tuple(tuple(v) for v in data.get("basis", [])))
    except (KeyError, TypeError):
        raise InvalidInputError("subspace needs 'base' and 'basis'", "subspace")


def same_span_subspaces(first: Subspace, second: Subspace) -> bool:
    return first.same_span(second)


@dataclass(frozen=True)
class SkewForm:
    """Matrix of B(v + A, w + A) = d omega(v, w) on representatives of K_x / A_x."""
    basis: Tuple[Vector, ...]
    matrix: Tuple[Tuple[Rational, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Rational(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        size = len(self.basis)
        if len(rows) != size or any(len(row) != size for row in rows):
            raise DimensionMismatchError(size, len(rows), "skew form size")
        M = Matrix(rows) if size else Matrix.zeros(0, 0)
        if M != -M.T:
            raise InvalidInputError("pairing matrix is not antisymmetric", "skew form")
        if size and M.det() == 0:
            raise InvalidInputError("pairing matrix is degenerate", "skew form")

    @property
    def size(self) -> int:
        return len(self.basis)

    def pair(self, u: Sequence, v: Sequence) -> Rational:
        """B on coefficient vectors relative to ``basis``."""
        total = Rational(0)
        for a, ua in enumerate(u):
            if ua:
                for b, vb in enumerate(v):
                    if vb:
                        total += ua * self.matrix[a][b] * vb
        return total

    def to_json(self) -> Dict[str, List]:
        return {
            "basis": [[format_rational(c) for c in v] for v in self.basis],
            "matrix": [[format_rational(c) for c in row] for row in self.matrix],
        }
