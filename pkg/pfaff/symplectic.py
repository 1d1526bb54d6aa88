"""
Symplectic bases of B on K_x / A_x and the graph chart of Legendrian planes.

With a symplectic basis (e_i, f_i), B(e_i, f_j) = delta_ij, every Legendrian
plane transverse to span(f) + A_x is span{e_i + sum_j S_ij f_j} + A_x for a
unique symmetric S; this is the chart S -> W of dimension k(k-1)/2.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import Matrix, Rational

from core.linalg import Vector, combine, solve_coordinates
from core.rational import RationalLike, to_matrix, to_point
from exceptions import InvalidInputError
from forms.pform import PForm
from pfaff.classify import pfaff_class
from pfaff.pointwise import bform_at, cauchy_at, is_legendrian, kernel_at
from pfaff.subspace import SkewForm, Subspace


def _unit(size: int, index: int) -> List[Rational]:
    return [Rational(int(i == index)) for i in range(size)]


def symplectic_basis(B: SkewForm) -> Tuple[Tuple[Vector, ...], Tuple[Vector, ...]]:
    """
    (e_1..e_m, f_1..f_m) in the ambient space with B(e_i, f_j) = delta_ij and
    B(e_i, e_j) = B(f_i, f_j) = 0, by skew Gram-Schmidt in basis order.
    """
    size = B.size
    remaining = [_unit(size, a) for a in range(size)]
    es, fs = [], []
    while remaining:
        u = remaining[0]
        partner = next((a for a in range(1, len(remaining)) if B.pair(u, remaining[a]) != 0), None)
        if partner is None:
            raise InvalidInputError("pairing is degenerate on the remaining vectors", "skew form")
        v = remaining[partner]
        scale = B.pair(u, v)
        f = [c / scale for c in v]
        es.append(u)
        fs.append(f)
        projected = []
        for a, w in enumerate(remaining):
            if a in (0, partner):
                continue
            wf, we = B.pair(w, f), B.pair(w, u)
            projected.append([w[i] - wf * u[i] + we * f[i] for i in range(size)])
        remaining = projected
    n = len(B.basis[0]) if B.basis else 0
    return (tuple(combine(e, B.basis, n) for e in es),
            tuple(combine(f, B.basis, n) for f in fs))


@dataclass(frozen=True)
class LegendrianChart:
    """The graph chart of Leg_x(omega) built from one symplectic basis."""
    base: Vector
    kernel: Subspace
    cauchy: Subspace
    e: Tuple[Vector, ...]
    f: Tuple[Vector, ...]

    @property
    def size(self) -> int:
        """k - 1: the order of the symmetric parameter matrices."""
        return len(self.e)

    @property
    def parameter_count(self) -> int:
        m = self.size
        return m * (m + 1) // 2

    def plane(self, S: Sequence[Sequence[RationalLike]]) -> Subspace:
        S = to_matrix(S) if len(S) else []
        m = self.size
        if len(S) != m or any(len(row) != m for row in S):
            raise InvalidInputError(f"S must be a symmetric {m}x{m} matrix", "matrix")
        if any(S[i][j] != S[j][i] for i in range(m) for j in range(i + 1, m)):
            raise InvalidInputError("S is not symmetric", "matrix")
        n = len(self.base)
        graph = []
        for i in range(m):
            coefficients = [Rational(1)] + list(S[i])
            graph.append(combine(coefficients, (self.e[i],) + self.f, n))
        return Subspace(self.base, tuple(graph) + self.cauchy.basis)

    def coordinates(self, W: Subspace) -> List[List[Rational]]:
        """The S with plane(S) = W; W must be Legendrian and transverse to span(f) + A_x."""
        m = self.size
        if m == 0:
            return []
        frame = self.e + self.f + self.cauchy.basis
        rows = [solve_coordinates(frame, w) for w in W.basis]
        E = Matrix([list(r[:m]) for r in rows]) if rows else Matrix.zeros(0, m)
        F = Matrix([list(r[m:2 * m]) for r in rows]) if rows else Matrix.zeros(0, m)
        if E.rank() < m:
            raise InvalidInputError("plane is not transverse to the conjugate Lagrangian", "subspace")
        _, pivots = E.T.rref()
        chosen = list(pivots)
        S = E.extract(chosen, list(range(m))).inv() * F.extract(chosen, list(range(m)))
        return [[Rational(S[i, j]) for j in range(m)] for i in range(m)]


def legendrian_chart(omega: PForm, point: Sequence[RationalLike]) -> LegendrianChart:
    base = to_point(point)
    kernel = kernel_at(omega, base)
    cauchy = cauchy_at(omega, base)
    if cauchy.dim == kernel.dim:
        return LegendrianChart(base, kernel, cauchy, (), ())
    e, f = symplectic_basis(bform_at(omega, base))
    return LegendrianChart(base, kernel, cauchy, e, f)


def sample_legendrian(omega: PForm, point: Sequence[RationalLike],
                      S: Sequence[Sequence[RationalLike]]) -> Subspace:
    """The Legendrian plane with graph parameter S (symmetric, (k-1)x(k-1))."""
    return legendrian_chart(omega, point).plane(S)


def legendrian_coordinates(omega: PForm, point: Sequence[RationalLike], W: Subspace) -> List[List[Rational]]:
    """Inverse of sample_legendrian on planes transverse to the conjugate Lagrangian."""
    if not is_legendrian(omega, point, W):
        raise InvalidInputError("subspace is not Legendrian at x", "subspace")
    return legendrian_chart(omega, point).coordinates(W)


def legendrian_dimension(omega: PForm, point: Sequence[RationalLike]) -> int:
    """Dimension of Leg_x(omega) as a manifold: k(k-1)/2."""
    k = pfaff_class(omega, point).k
    return k * (k - 1) // 2
