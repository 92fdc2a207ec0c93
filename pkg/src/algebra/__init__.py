"""Exact Laurent-polynomial arithmetic and linear algebra over Q[t^+-1]."""

from .laurent import (
    ONE,
    T_POLY,
    ZERO,
    LaurentPolynomial,
    RationalFunction,
    RingTag,
    TorsionClass,
    associated,
    exact_quotient,
    involute,
    lambda_membership,
    laurent_gcdex,
    normalize_alexander,
    residue,
    torsion_reduce,
    unit_normal,
)
from .polymatrix import (
    PolyMatrix,
    Submodule,
    block_diagonal,
    hermite_form,
    hstack,
    kernel_basis,
    kernel_mod_delta,
    quotient_order,
    submodule_eq,
    submodule_membership,
)

__all__ = [
    "ONE",
    "T_POLY",
    "ZERO",
    "LaurentPolynomial",
    "RationalFunction",
    "RingTag",
    "TorsionClass",
    "associated",
    "exact_quotient",
    "involute",
    "lambda_membership",
    "laurent_gcdex",
    "normalize_alexander",
    "residue",
    "torsion_reduce",
    "unit_normal",
    "PolyMatrix",
    "Submodule",
    "block_diagonal",
    "hermite_form",
    "hstack",
    "kernel_basis",
    "kernel_mod_delta",
    "quotient_order",
    "submodule_eq",
    "submodule_membership",
]
