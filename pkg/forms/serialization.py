"""JSON encoding of forms: a list of {"indices": [1-based, increasing], "coeff": expr-string}."""
from typing import Any, Dict, List, Sequence

from core.expr import Expr
from core.parser import parse_expr
from core.ring import coordinate_ring, ring_names
from exceptions import InvalidInputError
from forms.pform import PForm


def form_to_json(alpha: PForm) -> List[Dict[str, Any]]:
    return [
        {"indices": [i + 1 for i in indices], "coeff": str(coeff)}
        for indices, coeff in alpha.terms()
    ]


def form_from_json(data: Sequence[Dict[str, Any]], vars: Sequence[str], degree: int = None) -> PForm:
    """Inverse of form_to_json. ``degree`` is needed only for an empty term list."""
    ring = coordinate_ring(vars)
    n = ring.ngens
    coeffs: Dict[tuple, Expr] = {}
    for entry in data:
        try:
            raw = entry["indices"]
            text = entry["coeff"]
        except (KeyError, TypeError):
            raise InvalidInputError(f"form term {entry!r} needs 'indices' and 'coeff'", "form")
        if isinstance(raw, int):
            raw = [raw]
        if any(not isinstance(i, int) or not 1 <= i <= n for i in raw):
            raise InvalidInputError(f"indices {raw} must lie in 1..{n}", "form")
        ordered = sorted(raw)
        if len(set(ordered)) != len(ordered):
            raise InvalidInputError(f"repeated index in {raw}", "form")
        if degree is None:
            degree = len(raw)
        elif degree != len(raw):
            raise InvalidInputError(f"mixed degrees in form terms ({degree} and {len(raw)})", "form")
        term = PForm.basis(ring, [i - 1 for i in raw]).scale(parse_expr(str(text), ring_names(ring)))
        for key, c in term.coeffs.items():
            coeffs[key] = coeffs[key] + c if key in coeffs else c
    return PForm(ring, 1 if degree is None else degree, coeffs)
