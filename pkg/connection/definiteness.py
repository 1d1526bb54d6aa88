"""
Exact definiteness tests for symmetric rational matrices.

PD uses Sylvester's criterion on leading principal minors (Bareiss
determinants, stopping at the first non-positive minor). PSD uses the sign
pattern of the characteristic polynomial, which for a symmetric matrix is
equivalent to all principal minors being nonnegative.
"""
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from exceptions import InvalidInputError


def _as_symmetric(M) -> Matrix:
    if isinstance(M, Matrix):
        matrix = M
    elif len(M) == 0:
        matrix = Matrix.zeros(0, 0)
    else:
        matrix = Matrix([list(row) for row in M])
    if matrix.rows != matrix.cols:
        raise InvalidInputError(f"matrix is {matrix.rows}x{matrix.cols}, not square", "matrix")
    if matrix != matrix.T:
        raise InvalidInputError("matrix is not symmetric", "matrix")
    return matrix


def leading_principal_minors(M) -> List[Rational]:
    matrix = _as_symmetric(M)
    return [matrix[:size, :size].det(method="bareiss") for size in range(1, matrix.rows + 1)]


def pd_witness(M) -> Optional[Tuple[int, Rational]]:
    """(size, value) of the first leading principal minor that is not positive; None if M is PD."""
    matrix = _as_symmetric(M)
    for size in range(1, matrix.rows + 1):
        minor = matrix[:size, :size].det(method="bareiss")
        if minor <= 0:
            return size, Rational(minor)
    return None


def is_pd(M) -> bool:
    """Exact positive definiteness; the empty matrix is PD."""
    return pd_witness(M) is None


def is_nd(M) -> bool:
    return is_pd(-_as_symmetric(M))


def is_psd(M) -> bool:
    matrix = _as_symmetric(M)
    if matrix.rows == 0:
        return True
    coefficients = matrix.charpoly().all_coeffs()
    # det(tI - M) has alternating signs iff every eigenvalue is >= 0
    return all((-1) ** i * c >= 0 for i, c in enumerate(coefficients))


def is_nsd(M) -> bool:
    return is_psd(-_as_symmetric(M))


def add_matrices(*matrices: Sequence[Sequence]) -> List[List[Rational]]:
    n = len(matrices[0])
    return [[sum((m[i][j] for m in matrices), Rational(0)) for j in range(n)] for i in range(n)]


def scale_matrix(factor, M: Sequence[Sequence]) -> List[List[Rational]]:
    return [[factor * v for v in row] for row in M]


def outer(u: Sequence, v: Sequence) -> List[List[Rational]]:
    return [[Rational(a) * b for b in v] for a in u]
