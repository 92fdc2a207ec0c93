"""Twist-spin metabolizer constructions."""

from .metabolizers import (
    MetabolizerPair,
    StatementTag,
    TwistSpinScenario,
    consistency_check,
    doubled_form,
    epsilon_relation_check,
    even_metabolizers,
    graph_candidate,
    informal_metabolizers,
    monodromy_shift,
    odd_metabolizers,
    scale_metabolizer,
    second_summand_twist,
)

__all__ = [
    "MetabolizerPair",
    "StatementTag",
    "TwistSpinScenario",
    "consistency_check",
    "doubled_form",
    "epsilon_relation_check",
    "even_metabolizers",
    "graph_candidate",
    "informal_metabolizers",
    "monodromy_shift",
    "odd_metabolizers",
    "scale_metabolizer",
    "second_summand_twist",
]
