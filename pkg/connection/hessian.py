"""
Hessians and covariant derivatives of 1-forms for a torsion-free connection.

    H(u)_ij   = d_i d_j u + Gamma^k_ij d_k u
    (nabla w)_ik = d_i f_k + f_j Gamma^j_ik           for w = f_j dx^j
    S(w)      = symmetric part of nabla w = nabla w - dw
"""
from typing import Sequence

from core.expr import Expr
from core.rational import RationalLike
from connection.christoffel import Connection
from connection.definiteness import is_pd
from connection.symform import CovariantTensor, SymForm
from exceptions import DimensionMismatchError
from forms.pform import PForm
from logging_config import get_logger

logger = get_logger("connection.hessian")


def _check_ring(ring, connection: Connection):
    if connection.ring != ring:
        raise DimensionMismatchError(connection.n, ring.ngens, "connection dimension")


def _gamma_contraction(f: Sequence[Expr], connection: Connection, i: int, k: int) -> Expr:
    total = Expr.zero(connection.ring)
    for j, fj in enumerate(f):
        if fj.is_zero():
            continue
        g = connection.gamma(j, i, k)
        if not g.is_zero():
            total = total + fj * g
    return total


def hessian(u: Expr, connection: Connection) -> SymForm:
    _check_ring(u.ring, connection)
    n = u.nvars
    grad = u.gradient()
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = grad[j].diff(i)
            if not connection.is_flat():
                value = value + _gamma_contraction(grad, connection, i, j)
            rows[i][j] = rows[j][i] = value
    return SymForm(u.ring, rows, check=False)


def covariant_derivative(omega: PForm, connection: Connection) -> CovariantTensor:
    """nabla omega as a general (0,2)-tensor."""
    _check_ring(omega.ring, connection)
    f = omega.dense()
    n = omega.n
    rows = []
    for i in range(n):
        row = []
        for k in range(n):
            value = f[k].diff(i)
            if not connection.is_flat():
                value = value + _gamma_contraction(f, connection, i, k)
            row.append(value)
        rows.append(row)
    return CovariantTensor(omega.ring, rows)


def s_omega(omega: PForm, connection: Connection) -> SymForm:
    """The symmetrization of nabla omega."""
    return covariant_derivative(omega, connection).symmetric_part()


def is_strictly_convex_at(u: Expr, connection: Connection, point: Sequence[RationalLike]) -> bool:
    """Exact positive definiteness of H(u) at the point; raises PoleError."""
    matrix = hessian(u, connection).evaluate(point)
    result = is_pd(matrix)
    logger.debug(f"H(u) at {list(map(str, point))} PD={result}")
    return result
