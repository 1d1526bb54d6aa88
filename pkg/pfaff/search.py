"""
Search for a nabla-positive Legendrian plane at a point.

Candidates come from the graph chart: first the grid settings.SEARCH_GRID on
the free entries of S, then seeded random rationals, until the budget is
spent. Each hit is certified by an exact PD test of S(omega) restricted to W.
Emptiness is only reported when S(omega) fails to be PD on A_x or is negative
semidefinite on all of K_x.
"""
import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence

from sympy import Rational

from config import settings
from connection.christoffel import Connection
from connection.definiteness import is_nsd, is_pd
from connection.hessian import s_omega
from connection.symform import restrict_matrix
from constants import SEARCH_EMPTY, SEARCH_FOUND, SEARCH_INCONCLUSIVE
from core.rational import RationalLike, format_matrix, to_point
from forms.pform import PForm
from logging_config import get_logger
from pfaff.classify import pfaff_class
from pfaff.subspace import Subspace
from pfaff.symplectic import LegendrianChart, legendrian_chart
from shared.sampling import make_rng, random_rational

logger = get_logger("pfaff.search")


@dataclass
class LegendrianSearch:
    status: str
    subspace: Optional[Subspace] = None
    matrix: List[List[Rational]] = field(default_factory=list)
    parameter: List[List[Rational]] = field(default_factory=list)
    samples: int = 0
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status == SEARCH_FOUND

    def to_json(self) -> Dict[str, Any]:
        report = {"status": self.status, "samples": self.samples, "reason": self.reason}
        if self.subspace is not None:
            report["subspace"] = self.subspace.to_json()
            report["restricted"] = format_matrix(self.matrix)
            report["S"] = format_matrix(self.parameter)
        return report


def _fill(m: int, values: Sequence[Rational]) -> List[List[Rational]]:
    S = [[Rational(0)] * m for _ in range(m)]
    slots = [(i, j) for i in range(m) for j in range(i, m)]
    for (i, j), v in zip(slots, values):
        S[i][j] = S[j][i] = Rational(v)
    return S


def candidate_parameters(m: int, seed: int) -> Iterator[List[List[Rational]]]:
    """Grid first, then random p/q entries; infinite."""
    count = m * (m + 1) // 2
    for values in itertools.product(settings.SEARCH_GRID, repeat=count):
        yield _fill(m, values)
    rng = make_rng(seed)
    while True:
        yield _fill(m, [random_rational(rng) for _ in range(count)])


def find_positive_legendrian(omega: PForm, point: Sequence[RationalLike], connection: Connection,
                             budget: int = None, seed: int = None) -> LegendrianSearch:
    budget = settings.DEFAULT_BUDGET if budget is None else budget
    seed = settings.DEFAULT_SEED if seed is None else seed
    base = to_point(point)
    pfaff_class(omega, base)
    chart: LegendrianChart = legendrian_chart(omega, base)
    Q = s_omega(omega, connection).evaluate(base)

    if chart.size == 0:
        # k = 1: the only Legendrian plane is K_x itself
        W = chart.kernel
        restricted = restrict_matrix(Q, W.basis)
        if is_pd(restricted):
            return LegendrianSearch(SEARCH_FOUND, W, restricted, [], 1, "K_x is the only Legendrian plane")
        return LegendrianSearch(SEARCH_EMPTY, samples=1,
                                reason="S(omega) is not positive definite on K_x, the only Legendrian plane")

    if chart.cauchy.dim and not is_pd(restrict_matrix(Q, chart.cauchy.basis)):
        logger.info("Leg+ empty at x: S(omega) is not positive definite on A_x")
        return LegendrianSearch(SEARCH_EMPTY, reason="S(omega) is not positive definite on A_x")
    if is_nsd(restrict_matrix(Q, chart.kernel.basis)):
        logger.info("Leg+ empty at x: S(omega) is negative semidefinite on K_x")
        return LegendrianSearch(SEARCH_EMPTY, reason="S(omega) is negative semidefinite on K_x")

    samples = 0
    for S in candidate_parameters(chart.size, seed):
        if samples >= budget:
            break
        samples += 1
        W = chart.plane(S)
        restricted = restrict_matrix(Q, W.basis)
        if is_pd(restricted):
            logger.info(f"Leg+ hit after {samples} samples: S = {format_matrix(S)}")
            return LegendrianSearch(SEARCH_FOUND, W, restricted, S, samples, "restricted S(omega) is PD")
        logger.debug(f"sample {samples}: S = {format_matrix(S)} not positive")

    logger.warning(f"Leg+ search inconclusive after {samples} samples")
    return LegendrianSearch(SEARCH_INCONCLUSIVE, samples=samples,
                            reason=f"no positive Legendrian plane among {samples} samples")
