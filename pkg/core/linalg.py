"""
Exact linear algebra over QQ for pointwise computations.

Vectors are tuples of sympy Rationals; sympy Matrix does the elimination.
"""
from typing import List, Sequence, Tuple

from sympy import Matrix, Rational

Vector = Tuple[Rational, ...]


def as_matrix(rows: Sequence[Sequence], ncols: int = 0) -> Matrix:
    if not rows:
        return Matrix.zeros(0, ncols)
    return Matrix([list(row) for row in rows])


def columns_matrix(vectors: Sequence[Vector], n: int) -> Matrix:
    """n x len(vectors) matrix whose columns are the vectors."""
    if not vectors:
        return Matrix.zeros(n, 0)
    return Matrix([list(v) for v in vectors]).T


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[Vector]:
    """Basis of {v : rows . v = 0} in reduced-echelon order."""
    if not rows:
        return [tuple(Rational(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    return [tuple(col) for col in as_matrix(rows).nullspace()]


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return as_matrix(rows).rank()


def is_independent(vectors: Sequence[Vector]) -> bool:
    return rank(vectors) == len(vectors)


def same_span(first: Sequence[Vector], second: Sequence[Vector]) -> bool:
    r1, r2 = rank(first), rank(second)
    return r1 == r2 and rank(list(first) + list(second)) == r1


def extend_to_complement(base: Sequence[Vector], candidates: Sequence[Vector]) -> List[Vector]:
    """Greedily pick candidates that extend span(base); returns only the picked ones."""
    chosen: List[Vector] = []
    current = list(base)
    r = rank(current)
    for v in candidates:
        trial = current + [v]
        r_trial = rank(trial)
        if r_trial > r:
            chosen.append(v)
            current, r = trial, r_trial
    return chosen


def combine(coefficients: Sequence[Rational], vectors: Sequence[Vector], n: int) -> Vector:
    out = [Rational(0)] * n
    for c, v in zip(coefficients, vectors):
        if c:
            for i in range(n):
                out[i] += c * v[i]
    return tuple(out)


def dot(u: Sequence, v: Sequence) -> Rational:
    return sum((a * b for a, b in zip(u, v)), Rational(0))


def bilinear(matrix: Sequence[Sequence], u: Sequence, v: Sequence) -> Rational:
    """u^T M v."""
    total = Rational(0)
    for i, ui in enumerate(u):
        if ui:
            row = matrix[i]
            for j, vj in enumerate(v):
                if vj:
                    total += ui * row[j] * vj
    return total


def gram(matrix: Sequence[Sequence], vectors: Sequence[Vector]) -> List[List[Rational]]:
    """[v_a^T M v_b] over the given vectors."""
    return [[bilinear(matrix, va, vb) for vb in vectors] for va in vectors]


def solve_coordinates(basis: Sequence[Vector], v: Vector) -> Tuple[Rational, ...]:
    """Coordinates of v in an independent basis; raises ValueError if v is outside the span."""
    A = columns_matrix(basis, len(v))
    solution, params = A.gauss_jordan_solve(Matrix(list(v)))
    if params.shape[0]:
        raise ValueError("basis is not independent")
    return tuple(solution)
