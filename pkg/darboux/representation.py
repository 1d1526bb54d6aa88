"""Convex Pfaff-Darboux representations omega = sum a_i du^i and their certificates."""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

from sympy import Rational

from core.expr import Expr
from core.parser import parse_expr
from core.rational import format_rational, to_point, to_rational
from core.ring import coordinate_ring, ring_names
from exceptions import InvalidInputError
from forms.pform import PForm


def _opt(value: Optional[Rational]) -> Optional[str]:
    return None if value is None else format_rational(value)


def _opt_in(value) -> Optional[Rational]:
    return None if value is None else to_rational(value)


@dataclass
class Certificate:
    """Constants chosen by the pipeline; b and epsilon are None when k = 1."""
    c: Optional[Rational] = None
    m: Optional[Rational] = None
    b: Optional[Rational] = None
    epsilon: Optional[Rational] = None
    sampled_radius: Optional[Rational] = None

    def to_json(self) -> Dict[str, Optional[str]]:
        return {
            "c": _opt(self.c),
            "m": _opt(self.m),
            "b": _opt(self.b),
            "epsilon": _opt(self.epsilon),
            "sampled_radius": _opt(self.sampled_radius),
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Certificate":
        return cls(**{key: _opt_in(data.get(key)) for key in ("c", "m", "b", "epsilon", "sampled_radius")})


@dataclass
class ConvexRep:
    k: int
    base: Tuple[Rational, ...]
    u: Tuple[Expr, ...]
    a: Tuple[Expr, ...]
    certificate: Certificate = field(default_factory=Certificate)
    # y-functions of the seed chart; their level sets are the leaves
    leaves: Tuple[Expr, ...] = ()

    def __post_init__(self):
        self.base = to_point(self.base)
        self.u = tuple(self.u)
        self.a = tuple(self.a)
        self.leaves = tuple(self.leaves)
        if len(self.u) != self.k or len(self.a) != self.k:
            raise InvalidInputError(f"expected {self.k} functions u and a, got {len(self.u)} and {len(self.a)}",
                                    "representation")

    @property
    def ring(self):
        return self.u[0].ring

    def form(self) -> PForm:
        """sum_i a_i du^i."""
        total = PForm.zero(self.ring, 1)
        for ai, ui in zip(self.a, self.u):
            total = total + PForm.exact(ui).scale(ai)
        return total

    def submersion_functions(self) -> Tuple[Expr, ...]:
        """(u1..uk, a2/a1, ..., ak/a1): the coordinates of (u, [a])."""
        return self.u + tuple(aj / self.a[0] for aj in self.a[1:])

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "base": [format_rational(v) for v in self.base],
            "u": [str(f) for f in self.u],
            "a": [str(f) for f in self.a],
            "leaves": [str(f) for f in self.leaves],
            "certificate": self.certificate.to_json(),
        }


def rep_from_json(data: Dict[str, Any], vars: Sequence[str]) -> ConvexRep:
    names = ring_names(coordinate_ring(vars))
    try:
        u = [parse_expr(str(t), names) for t in data["u"]]
        a = [parse_expr(str(t), names) for t in data["a"]]
        base = data["base"]
    except (KeyError, TypeError):
        raise InvalidInputError("representation needs 'u', 'a' and 'base'", "representation")
    leaves = [parse_expr(str(t), names) for t in data.get("leaves", [])]
    return ConvexRep(
        k=int(data.get("k", len(u))),
        base=to_point(base),
        u=tuple(u),
        a=tuple(a),
        certificate=Certificate.from_json(data.get("certificate", {})),
        leaves=tuple(leaves),
    )
