"""
Legendrian foliation charts from a quadratic generating function.

Given a chart omega = dy1 + sum p_i dy^i and S(y) = 1/2 y^T S0 y over
(y2, ..., yk), the chart

    y1~ = y1 + S(y) + sum_i (p_i - S_i(y)) y^i
    yi~ = p_i - S_i(y)
    pi~ = -y^i

presents the same form, and its leaf tangent at x is the graph of S0 over
the old leaf directions.
"""
from typing import List, Sequence

from sympy import Matrix, Rational

from constants import FLAG_FACTOR_POSITIVE, STEP_GENERATING
from core.expr import Expr
from core.linalg import dot
from core.rational import RationalLike, to_matrix
from darboux.chart import SeedChart, validate_seed_chart
from darboux.submersion import jacobian_at
from exceptions import ChartValidationError, InvalidInputError, PreconditionError
from forms.pform import PForm
from logging_config import get_logger
from pfaff.subspace import Subspace

logger = get_logger("darboux.generating")


def _check_parameter(S0, m: int) -> List[List[Rational]]:
    S0 = to_matrix(S0) if len(S0) else []
    if len(S0) != m or any(len(row) != m for row in S0):
        raise InvalidInputError(f"S0 must be a symmetric {m}x{m} matrix", "matrix")
    if any(S0[i][j] != S0[j][i] for i in range(m) for j in range(i + 1, m)):
        raise InvalidInputError("S0 is not symmetric", "matrix")
    return S0


def chart_from_generating_function(omega: PForm, chart: SeedChart,
                                   S0: Sequence[Sequence[RationalLike]]) -> SeedChart:
    report = validate_seed_chart(omega, chart)
    if not report.passed_except(FLAG_FACTOR_POSITIVE):
        raise ChartValidationError(report, step=STEP_GENERATING)
    if not chart.has_unit_factor():
        raise PreconditionError(STEP_GENERATING, "the chart factor a must be identically 1")
    m = chart.k - 1
    S0 = _check_parameter(S0, m)

    ring = chart.ring
    tail = chart.y[1:]
    half = Rational(1, 2)
    gradient: List[Expr] = []
    for i in range(m):
        total = Expr.zero(ring)
        for j in range(m):
            if S0[i][j]:
                total = total + tail[j] * S0[i][j]
        gradient.append(total)
    S = Expr.zero(ring)
    for i in range(m):
        S = S + tail[i] * gradient[i] * half

    y1 = chart.y[0] + S
    new_tail, new_p = [], []
    for i in range(m):
        shifted = chart.p[i] - gradient[i]
        y1 = y1 + shifted * tail[i]
        new_tail.append(shifted)
        new_p.append(-tail[i])

    result = chart.with_functions(y=[y1] + new_tail, p=new_p)
    logger.info(f"generating-function chart built (k={chart.k}, S0={[[str(v) for v in row] for row in S0]})")
    return result


def generating_parameter(chart: SeedChart, W: Subspace) -> List[List[Rational]]:
    """
    The S0 whose generating-function chart has leaf tangent W at the chart's
    base: W lies in ker dy1(x) and dp_i = sum_j S0_ij dy^j on W.
    """
    m = chart.k - 1
    if m == 0:
        return []
    dy = jacobian_at(chart.y, chart.base)
    dp = jacobian_at(chart.p, chart.base)
    if any(dot(dy[0], w) != 0 for w in W.basis):
        raise InvalidInputError("the plane is not contained in ker dy1 at x", "subspace")
    Y = Matrix([[dot(dy[i + 1], w) for w in W.basis] for i in range(m)])
    P = Matrix([[dot(dp[i], w) for w in W.basis] for i in range(m)])
    if Y.rank() < m:
        raise InvalidInputError("the plane is not a graph over the leaf directions y2..yk", "subspace")
    S0 = P * Y.T * (Y * Y.T).inv()
    if S0 != S0.T or P != S0 * Y:
        raise InvalidInputError("the plane is not the leaf tangent of a generating-function chart", "subspace")
    return [[Rational(S0[i, j]) for j in range(m)] for i in range(m)]
