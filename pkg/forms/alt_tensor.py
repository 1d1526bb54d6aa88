"""
Pointwise values of differential forms as alternating tensors.

Evaluation uses the averaged convention: a p-form with stored coefficients
c_I acts on vectors v_1..v_p as (1/p!) sum_I c_I det[v_a(i_b)]. For 1-forms
a, b this gives (a ^ b)(u, v) = 1/2 (a(u) b(v) - a(v) b(u)).
"""
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List, Sequence, Tuple

from sympy import Matrix, Rational

from core.rational import RationalLike, to_point
from exceptions import DimensionMismatchError
from forms.pform import Indices, PForm


@dataclass(frozen=True)
class AltTensor:
    n: int
    p: int
    values: Dict[Indices, Rational] = field(default_factory=dict)

    def component(self, indices: Indices) -> Rational:
        return self.values.get(tuple(indices), Rational(0))

    def __call__(self, *vectors: Sequence[RationalLike]) -> Rational:
        """Multilinear value on p vectors under the averaged convention."""
        if len(vectors) != self.p:
            raise DimensionMismatchError(self.p, len(vectors), "number of vector arguments")
        if self.p == 0:
            return self.component(())
        rows = [to_point(v) for v in vectors]
        for v in rows:
            if len(v) != self.n:
                raise DimensionMismatchError(self.n, len(v), "vector dimension")
        total = Rational(0)
        for indices, c in self.values.items():
            if self.p == 1:
                minor = rows[0][indices[0]]
            elif self.p == 2:
                i, j = indices
                minor = rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i]
            else:
                minor = Matrix([[v[i] for i in indices] for v in rows]).det()
            total += c * minor
        return total / factorial(self.p)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def as_scalar(self) -> Rational:
        if self.p != 0:
            raise DimensionMismatchError(0, self.p, "tensor degree")
        return self.component(())

    def as_covector(self) -> Tuple[Rational, ...]:
        if self.p != 1:
            raise DimensionMismatchError(1, self.p, "tensor degree")
        return tuple(self.component((j,)) for j in range(self.n))

    def as_bilinear_matrix(self) -> List[List[Rational]]:
        """D with D[i][j] = value on (e_i, e_j); antisymmetric, entries c_ij / 2."""
        if self.p != 2:
            raise DimensionMismatchError(2, self.p, "tensor degree")
        half = Rational(1, 2)
        matrix = [[Rational(0)] * self.n for _ in range(self.n)]
        for (i, j), c in self.values.items():
            matrix[i][j] = half * c
            matrix[j][i] = -half * c
        return matrix


def eval_form(alpha: PForm, point: Sequence[RationalLike]) -> AltTensor:
    """Value of alpha at a point; raises PoleError when a coefficient has a pole there."""
    values = alpha.evaluate_coefficients(point)
    return AltTensor(alpha.n, alpha.p, {i: v for i, v in values.items() if v != 0})
