"""Tests for AnalysisService and VerificationService."""

import json
import time
from unittest.mock import patch

import pytest

from src.exceptions import TooLarge, UnknownFamily
from src.graphs.constructions import parse_family_id
from src.reports import CoverClassList, SymmetryReport, VerifySuite
from src.services import AnalysisService, VerificationService
from src.services.analysis_service import SYLOW_NOTE
from src.services.verification_service import NORMALIZER_SAMPLES, normalizer_is_aut
from src.symmetry import normalizer_matches_aut


class TestAnalysisService:
    """Tests for reports built by AnalysisService."""

    def test_analyze_k6(self, analysis_service):
        """K6: |Aut| 720, girth 3, 2-arc-transitive, basic."""
        report = analysis_service.analyze("K6")
        assert isinstance(report, SymmetryReport)
        assert (report.vertices, report.aut_order, report.girth) == (6, 720, 3)
        assert (report.s, report.stabilizer_order) == (2, 120)
        assert report.catalog == ["S_5"]
        assert report.basic is True
        assert report.quotient is None
        assert SYLOW_NOTE not in report.notes

    def test_analyze_non_basic(self, analysis_service):
        """CGD1(5^2) is a cover of CD(5) through a normal subgroup of order 5."""
        report = analysis_service.analyze("CGD1(p^2)", 5)
        assert report.family == "CGD1(5^2)"
        assert report.aut_order == 4000
        assert report.basic is False
        assert report.witness_order == 5
        assert report.quotient == "CD(5)"
        assert SYLOW_NOTE in report.notes

    def test_groups_are_cached(self):
        """A second request for the same instance reuses the group."""
        service = AnalysisService()
        ng = service.named("CD(11)")
        first = service.group_of(ng)
        assert service.cached_keys() == ["CD(11)[ell=3]"]
        assert service.group_of(service.named("CD(p)", 11)) is first
        service.clear_cache()
        assert service.cached_keys() == []

    def test_size_guard(self):
        """The service-wide vertex guard applies to every search."""
        service = AnalysisService(max_vertices=10)
        with pytest.raises(TooLarge):
            service.analyze("CD(11)")

    def test_unknown_family(self, analysis_service):
        """Unknown family ids are domain errors."""
        with pytest.raises(UnknownFamily):
            analysis_service.analyze("K7")

    def test_quotient(self, analysis_service):
        """The CGD1(11^2) chain has one step down to CD(11)."""
        chain = analysis_service.quotient("CGD1(11^2)")
        assert chain.basic is False
        assert [(s.normal_order, s.vertices, s.family) for s in chain.steps] == [(11, 22, "CD(11)")]

    def test_quotient_of_basic(self, analysis_service, k6):
        """A basic graph read from a file has an empty chain."""
        chain = analysis_service.quotient_graph(k6)
        assert chain.basic is True
        assert chain.steps == []

    def test_classify_both(self, analysis_service):
        """Both strategies agree at p = 11, n = 2."""
        result = analysis_service.classify(11, 2, "both")
        assert isinstance(result, CoverClassList)
        assert result.strategies_agree is True
        assert [c.matched_family for c in result.classes] == ["CGD1(p^2)", "CGD2(p^2)"]
        assert [c.lifting_group_order for c in result.classes] == [10, 20]

    def test_classify_single_strategy(self, analysis_service):
        """A single strategy leaves the agreement flag unset."""
        result = analysis_service.classify(7, 2, "analytic")
        assert result.classes == []
        assert result.strategies_agree is None

    def test_census(self, analysis_service):
        """The census report model mirrors the p = 11 census."""
        report = analysis_service.census(11)
        assert report.count == 3
        assert [g.aut_order for g in report.graphs] == [1210, 2420, 1210]
        assert report.pairwise_non_isomorphic


class TestVerificationService:
    """Tests for the acceptance-check runner."""

    def test_check_rows(self):
        """Nine shallow items, three more with the large instances."""
        service = VerificationService(AnalysisService())
        shallow = service.checks()
        assert [row[0] for row in shallow] == list(range(1, 10))
        assert not any(row[2] for row in shallow)
        deep = service.checks(deep=True)
        assert len(deep) == 12
        assert [row[0] for row in deep if row[2]] == [1, 5, 7]

    def test_run_suite_reports_expected_and_observed(self):
        """Each item carries JSON of both sides; any failure fails the suite."""
        service = VerificationService(AnalysisService())
        rows = [
            (1, "passes", False, lambda: ({"a": 1}, {"a": 1})),
            (2, "fails", False, lambda: (3, 4)),
        ]
        with patch.object(service, 'checks', return_value=rows):
            suite = service.run_suite(deep=False)
        assert isinstance(suite, VerifySuite)
        assert [i.passed for i in suite.items] == [True, False]
        assert json.loads(suite.items[0].observed) == {"a": 1}
        assert (suite.items[1].expected, suite.items[1].observed) == ("3", "4")
        assert not suite.passed

    def test_run_suite_records_errors(self):
        """A raising check is a failed item, not a crashed run."""
        service = VerificationService(AnalysisService())

        def broken():
            raise TooLarge("too many vertices")

        with patch.object(service, 'checks', return_value=[(4, "girths", False, broken)]):
            suite = service.run_suite(deep=False)
        assert not suite.items[0].passed
        assert "TooLarge" in suite.items[0].observed

    def test_verify_async(self):
        """A background run stores its results and refuses overlap."""
        service = VerificationService(AnalysisService())
        rows = [(3, "table", False, lambda: (1, 1))]

        def slow_suite(deep=None):
            time.sleep(0.2)
            return VerifySuite(deep=False, passed=True, items=[])

        with patch.object(service, 'checks', return_value=rows), \
                patch.object(service, 'run_suite', side_effect=slow_suite):
            assert service.verify_async() is True
            assert service.verify_async() is False
            for _ in range(50):
                if not service.is_running():
                    break
                time.sleep(0.05)

        assert not service.is_running()
        assert service.get_last_error() is None
        assert service.get_last_results().passed

    def test_verify_async_error(self):
        """Failures of the background run are kept for the status endpoint."""
        service = VerificationService(AnalysisService())
        with patch.object(service, 'run_suite', side_effect=RuntimeError("boom")):
            assert service.verify_async() is True
            for _ in range(50):
                if not service.is_running():
                    break
                time.sleep(0.05)
        assert service.get_last_error() == "boom"

    def test_symbolic_table_item(self):
        """The fundamental cycle table check passes on its own."""
        service = VerificationService(AnalysisService())
        row = next(r for r in service.checks() if r[0] == 3)
        expected, observed = row[3]()
        assert expected == observed

    def test_normalizer_samples_are_the_cayley_instances(self):
        """Every Cayley graph of the acceptance table is sampled, K6 and FQ4 are not."""
        assert {"CD(31)", "CGD2(19^2)", "CGD(3^4)", "CGD(5^3)", "CGD1(5^2)"} <= set(NORMALIZER_SAMPLES)
        assert "K6" not in NORMALIZER_SAMPLES
        assert "FQ4" not in NORMALIZER_SAMPLES

    @pytest.mark.parametrize("name,equal", [
        ("CD(11)", False),
        ("CD(31)", True),
        ("CD(11^2)", True),
        ("CGD1(5^2)", False),
        ("CGD1(11^2)", True),
        ("CGD2(11^2)", True),
        ("CGD(2^4)", True),
        pytest.param("CD(5)", False, marks=pytest.mark.slow),
        pytest.param("CGD2(19^2)", True, marks=pytest.mark.slow),
        pytest.param("CGD(5^3)", True, marks=pytest.mark.slow),
        pytest.param("CGD(3^4)", True, marks=pytest.mark.slow),
    ])
    def test_normalizer_against_aut(self, family_cache, name, equal):
        """R(G) x| Aut(G, S) is all of Aut exactly for the normal Cayley instances."""
        fid, p = parse_family_id(name)
        _, group = family_cache(name)
        check = normalizer_matches_aut(fid, p, group)
        assert check.generators_are_automorphisms
        assert check.normalizer_order == check.expected_order
        assert check.divides
        assert check.equal is equal
        assert normalizer_is_aut(fid, p) is equal

    @pytest.mark.slow
    def test_normalizer_item(self):
        """The property suite reports equal or proper for every sample as expected."""
        expected, observed = VerificationService(AnalysisService())._normalizers()
        assert len(expected) == len(NORMALIZER_SAMPLES)
        assert expected == observed
