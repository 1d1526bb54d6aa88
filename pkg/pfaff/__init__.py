# Pfaffian linear algebra package init
from pfaff.classify import PfaffClass, covector_at, pfaff_class
from pfaff.pointwise import bform_at, cauchy_at, d_omega_matrix, is_legendrian, kernel_at
from pfaff.search import LegendrianSearch, find_positive_legendrian
from pfaff.subspace import SkewForm, Subspace, same_span_subspaces, subspace_from_json
from pfaff.symplectic import (
    LegendrianChart,
    legendrian_chart,
    legendrian_coordinates,
    legendrian_dimension,
    sample_legendrian,
    symplectic_basis,
)

__all__ = [
    "PfaffClass",
    "covector_at",
    "pfaff_class",
    "bform_at",
    "cauchy_at",
    "d_omega_matrix",
    "is_legendrian",
    "kernel_at",
    "LegendrianSearch",
    "find_positive_legendrian",
    "SkewForm",
    "Subspace",
    "same_span_subspaces",
    "subspace_from_json",
    "LegendrianChart",
    "legendrian_chart",
    "legendrian_coordinates",
    "legendrian_dimension",
    "sample_legendrian",
    "symplectic_basis",
]
