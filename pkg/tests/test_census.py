"""Tests for the order-2p^2 census and the supplementary structural checks."""

import pytest

from src.exceptions import BudgetExceeded, UnsupportedParameter
from src.graphs import complete_bipartite, cycle_graph
from src.graphs.constructions import FamilyId
from src.symmetry import (
    brute_force_automorphisms,
    census_2p2,
    lattice_line_count,
    no_six_cycles_through_three_arc,
    normalizer_matches_aut,
    order_eight_pentavalent_check,
    six_cycles_through_three_arc,
)
from src.symmetry.census import COMPLETENESS_NOTE, brute_force_arc_transitive


class TestCensus:
    """Pentavalent symmetric graphs of order 2p^2 from the known families."""

    def test_p11(self):
        """Three pairwise non-isomorphic graphs at p = 11."""
        report = census_2p2(11)
        assert report.count == 3
        assert [e.family for e in report.graphs] == ["CGD1(11^2)", "CGD2(11^2)", "CD(11^2)"]
        assert [e.aut_order for e in report.graphs] == [1210, 2420, 1210]
        assert report.pairwise_non_isomorphic
        assert COMPLETENESS_NOTE in report.notes

    def test_p7_is_empty(self):
        """No family condition holds at p = 7."""
        report = census_2p2(7)
        assert report.count == 0
        assert report.pairwise_non_isomorphic

    @pytest.mark.slow
    def test_p19(self):
        """Only CGD2 exists at p = 19."""
        report = census_2p2(19)
        assert [e.family for e in report.graphs] == ["CGD2(19^2)"]
        assert report.graphs[0].aut_order == 7220

    def test_limits(self):
        """Composite p and p over the limit are refused."""
        with pytest.raises(UnsupportedParameter):
            census_2p2(9)
        with pytest.raises(BudgetExceeded):
            census_2p2(37)
        with pytest.raises(BudgetExceeded):
            census_2p2(11, max_p=7)

    def test_limit_from_config(self, budgets_env):
        """CENSUS_MAX_P is read at call time."""
        budgets_env.CENSUS_MAX_P = 7
        with pytest.raises(BudgetExceeded):
            census_2p2(11)


class TestSixCycles:
    """6-cycles through the distinguished 3-arc of the GD Cayley graphs."""

    def test_cgd_41_cubed(self):
        """No 6-cycle passes through the 3-arc of CGD(41^3) with ell = 10."""
        assert six_cycles_through_three_arc(FamilyId.CGD_P3, 41, ell=10) == 0
        assert no_six_cycles_through_three_arc(FamilyId.CGD_P3, 41, ell=10)

    @pytest.mark.deep
    @pytest.mark.parametrize("p", [11, 23])
    def test_rank_four(self, p):
        """No 6-cycle through the 3-arc of CGD(11^4) and CGD(23^4)."""
        assert no_six_cycles_through_three_arc(FamilyId.CGD_P4, p)

    def test_rank_two_refused(self):
        """Only the rank-3 and rank-4 families are handled."""
        with pytest.raises(UnsupportedParameter):
            six_cycles_through_three_arc(FamilyId.CGD1_P2, 11)


class TestSmallChecks:
    """Brute-force automorphisms, order 8, lattice lines and normalizers."""

    def test_brute_force_automorphisms(self, c6):
        """C6 has the 12 dihedral symmetries."""
        assert len(brute_force_automorphisms(c6)) == 12

    def test_brute_force_limit(self):
        """Ten vertices is over the brute-force limit."""
        with pytest.raises(BudgetExceeded):
            brute_force_automorphisms(cycle_graph(10))

    def test_brute_force_arc_transitive(self):
        """K_{3,3} is arc-transitive."""
        assert brute_force_arc_transitive(complete_bipartite(3, 3))

    def test_order_eight(self):
        """None of the three pentavalent graphs on 8 vertices is arc-transitive."""
        results = dict(order_eight_pentavalent_check())
        assert results == {"C_8": False, "C_5+C_3": False, "C_4+C_4": False}

    @pytest.mark.parametrize("p,lines", [(5, 6), (11, 12)])
    def test_lattice_lines(self, p, lines):
        """p + 1 order-p subgroups in Z_p^2."""
        assert lattice_line_count(p) == lines

    def test_normalizer_equals_aut(self, family_cache):
        """For CGD2(11^2) the normalizer of R(G) is all of Aut."""
        _, group = family_cache("CGD2(11^2)")
        check = normalizer_matches_aut(FamilyId.CGD2_P2, 11, group)
        assert check.generators_are_automorphisms
        assert check.normalizer_order == check.expected_order == 2420
        assert check.equal

    def test_normalizer_divides_aut(self, family_cache):
        """For CGD1(5^2) the normalizer is a proper subgroup of Aut."""
        _, group = family_cache("CGD1(5^2)")
        check = normalizer_matches_aut(FamilyId.CGD1_P2, 5, group)
        assert check.normalizer_order == check.expected_order
        assert check.divides
        assert not check.equal
