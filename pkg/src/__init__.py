"""Exact Blanchfield forms, twist-spin metabolizers and branched covers of knots."""

__version__ = "0.1.0"
