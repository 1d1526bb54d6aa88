# Affine connection package init
from connection.christoffel import Connection, connection_from_json
from connection.definiteness import (
    is_nd,
    is_nsd,
    is_pd,
    is_psd,
    leading_principal_minors,
    pd_witness,
)
from connection.hessian import covariant_derivative, hessian, is_strictly_convex_at, s_omega
from connection.symform import CovariantTensor, SymForm, restrict_form, symmetric_product

__all__ = [
    "Connection",
    "connection_from_json",
    "is_nd",
    "is_nsd",
    "is_pd",
    "is_psd",
    "leading_principal_minors",
    "pd_witness",
    "covariant_derivative",
    "hessian",
    "is_strictly_convex_at",
    "s_omega",
    "CovariantTensor",
    "SymForm",
    "restrict_form",
    "symmetric_product",
]
