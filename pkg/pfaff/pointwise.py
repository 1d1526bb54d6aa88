"""
Linear algebra of a 1-form at a point: the kernel K_x, the Cauchy
characteristic A_x, the pairing B on K_x / A_x, and the Legendrian test.
"""
from typing import List, Optional, Sequence

from sympy import Rational

from core.linalg import Vector, bilinear, combine, dot, extend_to_complement, gram, nullspace
from core.rational import RationalLike, to_point
from exceptions import InvalidInputError
from forms.alt_tensor import eval_form
from forms.pform import PForm
from pfaff.classify import covector_at, pfaff_class
from pfaff.subspace import SkewForm, Subspace


def d_omega_matrix(omega: PForm, point: Sequence[RationalLike]) -> List[List[Rational]]:
    """d omega(x) as an antisymmetric bilinear matrix (averaged convention)."""
    return eval_form(omega.d(), point).as_bilinear_matrix()


def kernel_at(omega: PForm, point: Sequence[RationalLike]) -> Subspace:
    covector = covector_at(omega, point)
    return Subspace(to_point(point), tuple(nullspace([covector], omega.n)))


def _cauchy_basis(kernel: Subspace, D) -> List[Vector]:
    M = gram(D, kernel.basis)
    return [combine(c, kernel.basis, kernel.n) for c in nullspace(M, kernel.dim)]


def cauchy_at(omega: PForm, point: Sequence[RationalLike]) -> Subspace:
    """A_x = {v in K_x : d omega(v, w) = 0 for all w in K_x}."""
    kernel = kernel_at(omega, point)
    D = d_omega_matrix(omega, point)
    return Subspace(kernel.base, tuple(_cauchy_basis(kernel, D)))


def bform_at(omega: PForm, point: Sequence[RationalLike],
             basis: Optional[Sequence[Sequence[RationalLike]]] = None) -> SkewForm:
    """
    The pairing B on a complement of A_x in K_x.

    Without an explicit basis, the complement is chosen greedily from the
    kernel basis in order.
    """
    kernel = kernel_at(omega, point)
    D = d_omega_matrix(omega, point)
    cauchy = _cauchy_basis(kernel, D)
    if len(cauchy) == kernel.dim:
        raise InvalidInputError("Pfaff class k = 1 at x: the pairing on K/A is empty", "bform")
    if basis is None:
        complement = extend_to_complement(cauchy, kernel.basis)
    else:
        complement = [to_point(v) for v in basis]
        if len(complement) != kernel.dim - len(cauchy):
            raise InvalidInputError(
                f"a complement of A_x in K_x has {kernel.dim - len(cauchy)} vectors, got {len(complement)}",
                "bform")
        for v in complement:
            if dot(covector_at(omega, point), v) != 0:
                raise InvalidInputError(f"vector {[str(c) for c in v]} is not in K_x", "bform")
        if len(extend_to_complement(cauchy, complement)) != len(complement):
            raise InvalidInputError("basis vectors are not independent modulo A_x", "bform")
    return SkewForm(tuple(complement), tuple(tuple(row) for row in gram(D, complement)))


def is_legendrian(omega: PForm, point: Sequence[RationalLike], W: Subspace) -> bool:
    """dim W = n - k and both omega(x) and d omega(x) vanish on W."""
    if not W.based_at(point):
        raise InvalidInputError(
            f"subspace is based at {[str(v) for v in W.base]}, not at {[str(v) for v in to_point(point)]}",
            "subspace")
    k = pfaff_class(omega, point).k
    if W.dim != omega.n - k:
        return False
    covector = covector_at(omega, point)
    if any(dot(covector, w) != 0 for w in W.basis):
        return False
    D = d_omega_matrix(omega, point)
    return all(bilinear(D, W.basis[a], W.basis[b]) == 0
               for a in range(W.dim) for b in range(a + 1, W.dim))
