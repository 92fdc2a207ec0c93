"""Unit tests for the verification pipeline and report builders."""

import json

import pytest

from src.algebra.laurent import LaurentPolynomial, TorsionClass
from src.exceptions import MissingEpsilonError, UsageError
from src.knots.catalog import KnotCatalog
from src.pairing.blanchfield import NotIsotropic
from src.pipeline import (
    CandidateResult,
    TwistSpinReport,
    VerificationPipeline,
    invariants_report,
    twist_spin_report,
)
from src.twistspin.metabolizers import StatementTag, TwistSpinScenario, informal_metabolizers


@pytest.fixture
def catalog():
    return KnotCatalog.load()


@pytest.fixture
def trefoil(catalog):
    return catalog.knot("trefoil")


@pytest.fixture
def pipeline():
    return VerificationPipeline(scaling_range=(-1, 1))


class TestVerificationPipeline:
    def test_unknot(self, catalog, pipeline):
        report = pipeline.run(TwistSpinScenario(catalog.knot("unknot"), 2))
        assert report.passed
        assert report.monodromy
        assert len(report.candidates) == 4

    def test_trefoil_even(self, trefoil, pipeline):
        report = pipeline.run(TwistSpinScenario(trefoil, 2))
        assert report.passed
        assert report.consistency is True
        assert report.epsilon_relation is None
        tags = [c.tag for c in report.candidates]
        assert tags == [StatementTag.INFORMAL] * 2 + [StatementTag.EVEN_K] * 2
        assert all(c.order_check for c in report.candidates)
        assert all(c.scaling_stable for c in report.candidates)

    def test_trefoil_odd(self, trefoil, pipeline):
        report = pipeline.run(TwistSpinScenario(trefoil, 1, eps=-1))
        assert report.passed
        assert len(report.candidates) == 6
        assert report.epsilon_relation is True
        assert report.consistency is None
        provenances = [c.candidate.provenance for c in report.candidates]
        assert "odd-minus(k=1,eps=-1)" in provenances
        assert "odd-plus(k=1,eps=+1)" in provenances

    def test_figure_eight_negative_k(self, catalog):
        report = twist_spin_report(TwistSpinScenario(catalog.knot("figure-eight"), -2), scaling=False)
        assert report.passed
        assert all(c.scaling_stable is None for c in report.candidates)

    def test_missing_eps(self, trefoil, pipeline):
        with pytest.raises(MissingEpsilonError):
            pipeline.run(TwistSpinScenario(trefoil, 3))

    def test_eps_with_even_k(self, trefoil, pipeline):
        with pytest.raises(UsageError):
            pipeline.run(TwistSpinScenario(trefoil, 2, eps=1))

    def test_report_json(self, trefoil):
        report = twist_spin_report(TwistSpinScenario(trefoil, 3, eps=1), scaling=False)
        record = json.loads(json.dumps(report.to_dict()))
        assert record["knot"] == "trefoil"
        assert record["k"] == 3
        assert record["eps"] == 1
        assert record["passed"] is True
        assert record["epsilon_relation"] is True
        assert "consistency" not in record
        assert len(record["order_checks"]) == 6
        assert {c["verdict"] for c in record["candidates"]} == {"Metabolizer"}


class TestReportFailures:
    def test_failed_candidate(self, trefoil):
        pair = informal_metabolizers(TwistSpinScenario(trefoil, 2))
        generator = pair.minus.generators[0]
        verdict = NotIsotropic(generator, generator, TorsionClass.zero())
        result = CandidateResult(pair.statement_tag, pair.minus, verdict)
        report = TwistSpinReport(knot="trefoil", k=2, candidates=[result])
        assert not result.passed
        assert not report.passed
        assert report.failures() == [result]
        assert report.to_dict()["candidates"][0]["verdict"] == "NotIsotropic"

    def test_failed_relation(self):
        report = TwistSpinReport(knot="trefoil", k=2, consistency=False)
        assert not report.passed


class TestInvariantsReport:
    def test_trefoil(self, trefoil):
        report = invariants_report(trefoil)
        assert report["knot"] == "trefoil"
        assert report["size"] == 2
        assert report["epsilon"] == 1
        assert report["alexander"] == LaurentPolynomial({0: 1, 1: -1, 2: 1})
        assert report["hermitian"] and report["well_defined"] and report["nonsingular"]
        assert len(report["pairing"]) == 2

    def test_unknot(self, catalog):
        report = invariants_report(catalog.knot("unknot"))
        assert report["pairing"] == ()
        assert report["nonsingular"]
