"""
Pfaff class of a 1-form at a point.

k is the largest integer with omega ^ (d omega)^(k-1) nonzero at x; the
rank conditions also ask omega ^ (d omega)^k to vanish identically, which
is reported as ``identically_degenerate``.
"""
from dataclasses import dataclass
from typing import Any, Dict, Sequence

from core.rational import RationalLike, to_point
from exceptions import DimensionMismatchError, FormVanishesError
from forms.alt_tensor import eval_form
from forms.pform import PForm
from logging_config import get_logger

logger = get_logger("pfaff.classify")


@dataclass(frozen=True)
class PfaffClass:
    n: int
    k: int
    identically_degenerate: bool

    @property
    def pfaff_rank(self) -> int:
        return self.k - 1

    @property
    def contact(self) -> bool:
        return self.n == 2 * self.k - 1

    @property
    def legendrian_dim(self) -> int:
        return self.n - self.k

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "contact": self.contact,
            "identically_degenerate": self.identically_degenerate,
        }


def covector_at(omega: PForm, point: Sequence[RationalLike]):
    """omega(x) as a covector; raises FormVanishesError if it is zero."""
    if omega.p != 1:
        raise DimensionMismatchError(1, omega.p, "form degree")
    covector = eval_form(omega, point).as_covector()
    if all(c == 0 for c in covector):
        raise FormVanishesError(to_point(point))
    return covector


def pfaff_class(omega: PForm, point: Sequence[RationalLike]) -> PfaffClass:
    covector_at(omega, point)
    d_omega = omega.d()
    k = 1
    current = omega
    while True:
        following = current.wedge(d_omega)
        if following.p > omega.n or eval_form(following, point).is_zero():
            break
        current = following
        k += 1
    degenerate = following.is_zero()
    if not degenerate:
        logger.warning(
            f"omega ^ (d omega)^{k} is not identically zero: the Pfaff class is not constant near x "
            f"(class {k} at x)"
        )
    return PfaffClass(n=omega.n, k=k, identically_degenerate=degenerate)
