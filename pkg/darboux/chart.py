"""
Seed charts: verified presentations omega = a (dy1 + p2 dy2 + ... + pk dyk)
around a base point, and their validation.
"""
from dataclasses import dataclass, replace
from typing import Any, Dict, List, Sequence, Tuple

from sympy import Rational

from constants import (
    FLAG_FACTOR_NONZERO,
    FLAG_FACTOR_POSITIVE,
    FLAG_IDENTITY,
    FLAG_PFAFF_CLASS,
    FLAG_RANK,
    FLAG_SHAPE,
    FLAG_VANISHING,
    FLAG_VOLUME,
)
from core.expr import Expr
from core.linalg import nullspace
from core.parser import parse_expr
from core.rational import RationalLike, format_rational, to_point
from core.ring import coordinate_ring, ring_names
from darboux.report import Report
from darboux.submersion import check_submersion, jacobian_at
from exceptions import ExprError, FormVanishesError, InvalidInputError
from forms.normal_form import class_form, normal_form_constant, volume_form
from forms.pform import PForm
from logging_config import get_logger
from pfaff.classify import pfaff_class
from pfaff.subspace import Subspace

logger = get_logger("darboux.chart")


@dataclass(frozen=True)
class SeedChart:
    k: int
    base: Tuple[Rational, ...]
    a: Expr
    y: Tuple[Expr, ...]
    p: Tuple[Expr, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", to_point(self.base))
        object.__setattr__(self, "y", tuple(self.y))
        object.__setattr__(self, "p", tuple(self.p))

    @property
    def ring(self):
        return self.a.ring

    @property
    def functions(self) -> Tuple[Expr, ...]:
        """(y1..yk, p2..pk)."""
        return self.y + self.p

    def with_functions(self, a: Expr = None, y: Sequence[Expr] = None, p: Sequence[Expr] = None) -> "SeedChart":
        return replace(self,
                       a=self.a if a is None else a,
                       y=self.y if y is None else tuple(y),
                       p=self.p if p is None else tuple(p))

    def form(self) -> PForm:
        """a (dy1 + sum_i p_i dy^i)."""
        theta = PForm.exact(self.y[0])
        for pi, yi in zip(self.p, self.y[1:]):
            theta = theta + PForm.exact(yi).scale(pi)
        return theta.scale(self.a)

    def has_unit_factor(self) -> bool:
        return self.a.equals(1)

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "base": [format_rational(v) for v in self.base],
            "a": str(self.a),
            "y": [str(f) for f in self.y],
            "p": [str(f) for f in self.p],
        }


def chart_from_json(data: Dict[str, Any], vars: Sequence[str], base: Sequence[RationalLike] = None) -> SeedChart:
    """Load a chart; ``a`` defaults to 1, ``base`` to the enclosing problem point."""
    names = ring_names(coordinate_ring(vars))
    try:
        y = [parse_expr(str(t), names) for t in data["y"]]
        p = [parse_expr(str(t), names) for t in data.get("p", [])]
    except (KeyError, TypeError):
        raise InvalidInputError("chart needs 'y' (and 'p' when k > 1)", "chart")
    a = parse_expr(str(data.get("a", "1")), names)
    point = data.get("base", base)
    if point is None:
        raise InvalidInputError("chart needs a base point", "chart")
    return SeedChart(k=int(data.get("k", len(y))), base=to_point(point), a=a, y=tuple(y), p=tuple(p))


def chart_identity_holds(omega: PForm, chart: SeedChart) -> bool:
    return omega.equals(chart.form())


def leaf_tangent(chart: SeedChart, point: Sequence[RationalLike] = None) -> Subspace:
    """The leaf tangent at x: the common kernel of dy1(x), ..., dyk(x)."""
    base = chart.base if point is None else to_point(point)
    rows = jacobian_at(chart.y, base)
    return Subspace(base, tuple(nullspace(rows, len(base))))


def _residual_witness(omega: PForm, chart: SeedChart) -> Dict[str, str]:
    residual = omega - chart.form()
    for indices, coeff in residual.terms():
        if not coeff.is_zero():
            return {"index": str(indices[0] + 1), "residual": str(coeff)}
    return {}


def validate_seed_chart(omega: PForm, chart: SeedChart, point: Sequence[RationalLike] = None) -> Report:
    """Exact check of every seed-chart invariant; failures are flags, never exceptions."""
    report = Report()
    base = chart.base if point is None else to_point(point)
    k = chart.k
    n = omega.n

    shape_ok = (
        k >= 1 and len(chart.y) == k and len(chart.p) == k - 1 and len(base) == n
        and chart.base == base
        and all(f.ring == omega.ring for f in (chart.a,) + chart.functions)
    )
    if not report.record(FLAG_SHAPE, shape_ok, {
        "k": k, "y": len(chart.y), "p": len(chart.p), "n": n,
        "base": [format_rational(v) for v in chart.base],
    }):
        return report

    try:
        nonzero = {}
        for name, f in _named_functions(chart):
            value = f.evaluate(base)
            if value != 0:
                nonzero[name] = format_rational(value)
        report.record(FLAG_VANISHING, not nonzero, nonzero)
    except ExprError as exc:
        report.record(FLAG_VANISHING, False, {"error": str(exc)})

    report.record(FLAG_IDENTITY, chart_identity_holds(omega, chart), _residual_witness(omega, chart))

    try:
        a_value = chart.a.evaluate(base)
        report.record(FLAG_FACTOR_NONZERO, a_value != 0, {"a(x)": format_rational(a_value)})
        report.record(FLAG_FACTOR_POSITIVE, a_value > 0, {"a(x)": format_rational(a_value)})
    except ExprError as exc:
        report.record(FLAG_FACTOR_NONZERO, False, {"error": str(exc)})
        report.record(FLAG_FACTOR_POSITIVE, False, {"error": str(exc)})

    try:
        report.record(FLAG_RANK, check_submersion(chart.functions, base, 2 * k - 1),
                      {"expected_rank": 2 * k - 1})
    except ExprError as exc:
        report.record(FLAG_RANK, False, {"error": str(exc)})

    try:
        found = pfaff_class(omega, base).k
        report.record(FLAG_PFAFF_CLASS, found == k, {"k_at_x": found})
    except (FormVanishesError, ExprError) as exc:
        report.record(FLAG_PFAFF_CLASS, False, {"error": str(exc)})

    lam, _ = normal_form_constant(k)
    expected = volume_form(chart.y, chart.p).scale(chart.a ** k * lam)
    report.record(FLAG_VOLUME, class_form(omega, k).equals(expected),
                  {"lambda_k": format_rational(lam)})

    logger.debug(f"seed chart validation (k={k}): {report.flags}")
    return report


def _named_functions(chart: SeedChart) -> List[Tuple[str, Expr]]:
    named = [(f"y{i + 1}", f) for i, f in enumerate(chart.y)]
    named += [(f"p{i + 2}", f) for i, f in enumerate(chart.p)]
    return named
