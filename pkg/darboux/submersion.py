"""Jacobian rank and kernel of a list of functions at a point."""
from typing import List, Sequence

from sympy import Rational

from core.expr import Expr
from core.linalg import nullspace, rank
from core.rational import RationalLike, to_point, to_qq
from exceptions import DimensionMismatchError, InvalidInputError, PoleError
from pfaff.subspace import Subspace


def jacobian_at(functions: Sequence[Expr], point: Sequence[RationalLike]) -> List[List[Rational]]:
    """Rows d f(x) for each function; raises PoleError."""
    if not functions:
        raise InvalidInputError("at least one function is required", "submersion")
    n = functions[0].nvars
    if len(point) != n:
        raise DimensionMismatchError(n, len(point), "point dimension")
    values = [to_qq(v) for v in point]
    try:
        return [[f.diff(i).evaluate_qq(values) for i in range(n)] for f in functions]
    except PoleError:
        raise PoleError(point)


def check_submersion(functions: Sequence[Expr], point: Sequence[RationalLike], expected_rank: int) -> bool:
    return rank(jacobian_at(functions, point)) == expected_rank


def submersion_kernel(functions: Sequence[Expr], point: Sequence[RationalLike]) -> Subspace:
    rows = jacobian_at(functions, point)
    return Subspace(to_point(point), tuple(nullspace(rows, len(point))))
