"""Seifert models and knot catalogs."""

from .catalog import (
    BUILTIN_CATALOG,
    CatalogLoader,
    KnotCatalog,
    KnotCatalogEntry,
    catalog_frame,
)
from .seifert import (
    SeifertKnot,
    alexander_polynomial,
    connected_sum,
    intersection_form,
    mirror_inverse,
    presentation_matrix,
    validate,
)

__all__ = [
    "BUILTIN_CATALOG",
    "CatalogLoader",
    "KnotCatalog",
    "KnotCatalogEntry",
    "catalog_frame",
    "SeifertKnot",
    "alexander_polynomial",
    "connected_sum",
    "intersection_form",
    "mirror_inverse",
    "presentation_matrix",
    "validate",
]
