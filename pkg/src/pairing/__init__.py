"""Blanchfield pairings and metabolizer verification."""

from .blanchfield import (
    BlanchfieldForm,
    IsotropicNotMaximal,
    Metabolizer,
    MetabolizerCandidate,
    NotIsotropic,
    Verdict,
    build_form,
    check_isometry,
    connected_sum_form,
    connected_sum_isometry,
    direct_sum_neg,
    hermitian_check,
    metabolizer_order_check,
    nonsingularity_check,
    orthogonal_complement,
    pair_elements,
    relations_check,
    transport_candidate,
    verification_report,
    verify_metabolizer,
)

__all__ = [
    "BlanchfieldForm",
    "IsotropicNotMaximal",
    "Metabolizer",
    "MetabolizerCandidate",
    "NotIsotropic",
    "Verdict",
    "build_form",
    "check_isometry",
    "connected_sum_form",
    "connected_sum_isometry",
    "direct_sum_neg",
    "hermitian_check",
    "metabolizer_order_check",
    "nonsingularity_check",
    "orthogonal_complement",
    "pair_elements",
    "relations_check",
    "transport_candidate",
    "verification_report",
    "verify_metabolizer",
]
