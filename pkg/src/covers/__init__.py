"""Cyclic branched covers."""

from .branched import (
    BranchedCoverSummary,
    branched_order,
    branched_presentation,
    branched_summary,
    branched_table,
    cyclic_shift,
    fiber_check,
)

__all__ = [
    "BranchedCoverSummary",
    "branched_order",
    "branched_presentation",
    "branched_summary",
    "branched_table",
    "cyclic_shift",
    "fiber_check",
]
