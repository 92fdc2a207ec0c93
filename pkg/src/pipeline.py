"""Report orchestration: invariants of a knot and twist-spin verification."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .knots.seifert import SeifertKnot, alexander_polynomial, presentation_matrix
from .pairing.blanchfield import (
    MetabolizerCandidate,
    Verdict,
    build_form,
    hermitian_check,
    metabolizer_order_check,
    nonsingularity_check,
    relations_check,
    verify_metabolizer,
)
from .twistspin.metabolizers import (
    MetabolizerPair,
    StatementTag,
    TwistSpinScenario,
    consistency_check,
    epsilon_relation_check,
    even_metabolizers,
    informal_metabolizers,
    monodromy_shift,
    odd_metabolizers,
    scale_metabolizer,
)

logger = logging.getLogger(__name__)

SCALING_RANGE = (-3, 3)


@dataclass
class CandidateResult:
    """Verdict and oracle outcomes for one candidate."""

    tag: StatementTag
    candidate: MetabolizerCandidate
    verdict: Verdict
    order_check: Optional[bool] = None
    scaling_stable: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return (
            self.verdict.is_metabolizer
            and self.order_check is not False
            and self.scaling_stable is not False
        )

    def to_dict(self) -> Dict:
        record = {"tag": self.tag.value, "provenance": self.candidate.provenance}
        record.update(self.verdict.to_dict())
        if self.scaling_stable is not None:
            record["scaling_stable"] = self.scaling_stable
        return record


@dataclass
class TwistSpinReport:
    """Everything checked for one (knot, k) scenario."""

    knot: str
    k: int
    eps: Optional[int] = None
    candidates: List[CandidateResult] = field(default_factory=list)
    consistency: Optional[bool] = None
    epsilon_relation: Optional[bool] = None
    monodromy: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return (
            all(c.passed for c in self.candidates)
            and self.consistency is not False
            and self.epsilon_relation is not False
            and self.monodromy is not False
        )

    def failures(self) -> List[CandidateResult]:
        """Candidate results that did not verify."""
        return [c for c in self.candidates if not c.passed]

    def to_dict(self) -> Dict:
        record: Dict = {
            "knot": self.knot,
            "k": self.k,
            "candidates": [c.to_dict() for c in self.candidates],
            "order_checks": [
                {"provenance": c.candidate.provenance, "passed": c.order_check}
                for c in self.candidates
                if c.order_check is not None
            ],
            "monodromy": self.monodromy,
            "passed": self.passed,
        }
        if self.eps is not None:
            record["eps"] = self.eps
        if self.consistency is not None:
            record["consistency"] = self.consistency
        if self.epsilon_relation is not None:
            record["epsilon_relation"] = self.epsilon_relation
        return record


class VerificationPipeline:
    """Runs the twist-spin constructions and every oracle on them."""

    def __init__(self, scaling: bool = True, scaling_range: Tuple[int, int] = SCALING_RANGE):
        """Initialize pipeline.

        Args:
            scaling: Whether to re-verify every metabolizer after t^n scaling
            scaling_range: Inclusive range of n for the scaling sweep
        """
        self.scaling = scaling
        self.scaling_range = scaling_range

    def _check_candidate(self, pair: MetabolizerPair, candidate: MetabolizerCandidate) -> CandidateResult:
        verdict = verify_metabolizer(pair.form, candidate)
        result = CandidateResult(pair.statement_tag, candidate, verdict)
        if not verdict.is_metabolizer:
            logger.warning(f"{candidate.provenance}: {verdict.verdict}")
            return result
        result.order_check = metabolizer_order_check(pair.form, candidate)
        if self.scaling:
            lo, hi = self.scaling_range
            result.scaling_stable = all(
                verify_metabolizer(pair.form, scale_metabolizer(candidate, n)).is_metabolizer
                for n in range(lo, hi + 1)
                if n != 0
            )
        return result

    def _check_pair(self, report: TwistSpinReport, pair: MetabolizerPair) -> None:
        for candidate in pair.candidates():
            report.candidates.append(self._check_candidate(pair, candidate))

    def run(self, scenario: TwistSpinScenario) -> TwistSpinReport:
        """Run every applicable construction for a scenario.

        Args:
            scenario: Knot, k and (for odd k) eps

        Returns:
            Report with all verdicts and oracle outcomes
        """
        scenario.require_consistent()
        label = scenario.knot.label
        report = TwistSpinReport(knot=label, k=scenario.k, eps=scenario.eps)

        logger.info(f"Step 1: Informal metabolizers for {label}, k={scenario.k}")
        informal = informal_metabolizers(scenario)
        self._check_pair(report, informal)
        shift = monodromy_shift(informal)
        report.monodromy = informal.form.rank == 0 or shift == scenario.k

        if scenario.is_even:
            logger.info(f"Step 2: Even-k metabolizers for {label}")
            self._check_pair(report, even_metabolizers(scenario))
            logger.info(f"Step 3: Consistency of informal and even-k pairs for {label}")
            report.consistency = consistency_check(scenario)
        else:
            logger.info(f"Step 2: Odd-k metabolizers for {label}, both eps")
            for eps in (-1, 1):
                self._check_pair(report, odd_metabolizers(scenario, eps))
            logger.info(f"Step 3: eps relation for {label}")
            report.epsilon_relation = epsilon_relation_check(scenario.knot, scenario.k)

        if report.passed:
            logger.info(f"Verified {len(report.candidates)} candidates for {label}, k={scenario.k}")
        else:
            logger.warning(
                f"{len(report.failures())} failed candidates for {label}, k={scenario.k}"
            )
        return report


def twist_spin_report(scenario: TwistSpinScenario, scaling: bool = True) -> TwistSpinReport:
    """Run the verification pipeline on one scenario.

    Args:
        scenario: knot, k and eps to verify
        scaling: also re-verify each candidate scaled by t^n

    Returns:
        TwistSpinReport with one CandidateResult per candidate
    """
    return VerificationPipeline(scaling=scaling).run(scenario)


def invariants_report(knot: SeifertKnot) -> Dict:
    """Alexander polynomial, presentation, pairing and form sanity verdicts."""
    form = build_form(knot)
    return {
        "knot": knot.label,
        "size": knot.size,
        "epsilon": knot.sign,
        "alexander": alexander_polynomial(knot),
        "presentation": presentation_matrix(knot),
        "pairing": form.pairing,
        "hermitian": hermitian_check(form),
        "well_defined": relations_check(form),
        "nonsingular": nonsingularity_check(form),
    }
