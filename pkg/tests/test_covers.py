"""Tests for Dip_5 automorphisms, voltages, lifts, cover isomorphism and classification."""

import pytest

from src.algebra import FpMatrix
from src.covers import (
    ALPHA,
    BETA,
    DELTA,
    EPSILON,
    GAMMA,
    IDENTITY,
    Dip5Voltage,
    all_dip_auts,
    classify,
    cover_is_arc_transitive,
    covers_isomorphic,
    derived,
    family_voltage,
    fibre_preserving_group,
    fundamental_voltages,
    gd_relabeling,
    induced_pairs,
    lift_to_cover,
    lifting_group,
    lifts,
    symbolic_table,
    witness_for,
)
from src.covers.dipole import DipAut, arc_orbit
from src.covers.voltage import render_word
from src.exceptions import (
    BudgetExceeded,
    CoverError,
    NoSquareRootOf5,
    NotALift,
    NotSpanning,
    ParallelArcs,
    UnknownFamily,
)
from src.graphs.constructions import FamilyId, family, order5_units, resolve_lambda


EXPECTED_TABLE = {
    "zeta": ["a", "b", "c", "d"],
    "alpha": ["ba^{-1}", "ca^{-1}", "da^{-1}", "a^{-1}"],
    "beta": ["ca^{-1}", "a^{-1}", "ba^{-1}", "da^{-1}"],
    "beta^2": ["bc^{-1}", "ac^{-1}", "c^{-1}", "dc^{-1}"],
    "gamma": ["a^{-1}", "b^{-1}", "c^{-1}", "d^{-1}"],
    "delta": ["ba^{-1}", "a^{-1}", "ca^{-1}", "da^{-1}"],
    "epsilon": ["da^{-1}", "ba^{-1}", "a^{-1}", "ca^{-1}"],
}


class TestDipole:
    """Tests for Aut(Dip_5) = S_5 x Z_2."""

    def test_group_size(self):
        """240 automorphisms, identity first."""
        auts = all_dip_auts()
        assert len(auts) == 240
        assert len(set(auts)) == 240
        assert auts[0] == IDENTITY

    def test_named_orders(self):
        """alpha has order 5, beta 4, gamma 2, delta 3."""
        def order(s: DipAut) -> int:
            k, t = 1, s
            while not t.is_identity():
                t, k = t * s, k + 1
            return k
        assert [order(s) for s in (ALPHA, BETA, GAMMA, DELTA, EPSILON)] == [5, 4, 2, 3, 4]

    def test_product_applies_left_first(self):
        """(s * t) sends arc i to t(s(i))."""
        product = ALPHA * BETA
        assert all(product.pi[i] == BETA.pi[ALPHA.pi[i]] for i in range(5))
        assert (ALPHA * ALPHA.inverse()).is_identity()

    def test_cycle_notation(self):
        """1-based cycles with the swap flag."""
        assert BETA.cycle_notation() == "(1 2 4 3)"
        assert GAMMA.cycle_notation() == "() swap"

    def test_arc_orbit(self):
        """alpha and gamma together reach all ten arcs."""
        assert len(arc_orbit([ALPHA])) == 5
        assert len(arc_orbit([ALPHA, GAMMA])) == 10

    def test_invalid_permutation(self):
        """pi must permute the five arcs."""
        with pytest.raises(ValueError):
            DipAut(0, (0, 0, 1, 2, 3))


class TestVoltages:
    """Tests for voltage assignments and derived covers."""

    def test_family_voltage_cgd1_at_five(self):
        """CGD1 at p = 5 uses ell = 1."""
        z = family_voltage(FamilyId.CGD1_P2, 5)
        assert z.zeta == ((0, 0), (1, 0), (3, 1), (1, 3), (0, 1))

    def test_fundamental_voltages(self, cgd2_11_voltage):
        """W_1..W_4 of CGD2 at p = 11."""
        assert fundamental_voltages(cgd2_11_voltage) == ((1, 0), (8, 1), (1, 8), (0, 1))

    def test_cgd2_needs_square_root(self):
        """5 is not a square modulo 7."""
        with pytest.raises(NoSquareRootOf5):
            family_voltage(FamilyId.CGD2_P2, 7)

    def test_non_cover_family(self):
        """CD(p) is not a Z_p^n-cover family."""
        with pytest.raises(UnknownFamily):
            family_voltage(FamilyId.CD_P, 11)

    def test_tree_arc_is_zero(self):
        """Voltages are T-reduced."""
        with pytest.raises(CoverError):
            Dip5Voltage.from_vectors(5, [(1, 0), (1, 0), (0, 1), (1, 1), (2, 1)])

    def test_invalid_prime_and_rank(self):
        """p must be prime and n between 1 and 4."""
        with pytest.raises(CoverError):
            Dip5Voltage.from_vectors(6, [(0,), (1,), (2,), (3,), (4,)])
        with pytest.raises(CoverError):
            Dip5Voltage(5, 5, tuple((0,) * 5 for _ in range(5)))

    def test_not_spanning(self):
        """Cotree voltages on a line do not span F_5^2."""
        z = Dip5Voltage.from_vectors(5, [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)])
        with pytest.raises(NotSpanning):
            derived(z)

    def test_parallel_arcs(self):
        """Two arcs with equal voltage would give a multigraph."""
        z = Dip5Voltage.from_vectors(5, [(0, 0), (1, 0), (1, 0), (0, 1), (1, 1)])
        with pytest.raises(ParallelArcs):
            derived(z)

    def test_dict_round_trip(self, cgd2_11_voltage):
        """to_dict and from_dict agree; malformed dicts are refused."""
        assert Dip5Voltage.from_dict(cgd2_11_voltage.to_dict()) == cgd2_11_voltage
        with pytest.raises(CoverError):
            Dip5Voltage.from_dict({"p": 5})

    def test_derived_cover_shape(self, basis_voltage_p3):
        """Order 2 * 3^4, pentavalent, bipartite on the two fibres."""
        cover = derived(basis_voltage_p3)
        assert cover.graph.vertex_count == 162
        assert cover.graph.is_regular(5)
        assert cover.label(81) == ("v", (0, 0, 0, 0))
        assert cover.vertex("u", (0, 0, 0, 1)) == 1

    @pytest.mark.parametrize("fid,p", [
        (FamilyId.CGD1_P2, 5), (FamilyId.CGD2_P2, 11), (FamilyId.CGD_P3, 5), (FamilyId.CGD_P4, 3),
    ])
    def test_relabeled_cover_is_family_graph(self, fid, p):
        """(u, x) -> (-x, 0), (v, y) -> (y, 1) turns the cover into the Cayley graph."""
        z = family_voltage(fid, p)
        assert derived(z).graph.relabel(gd_relabeling(z)) == family(fid, p).graph


class TestLifting:
    """Tests for the lifting criterion and the fibre-preserving group."""

    def test_symbolic_table(self):
        """Images of the fundamental closed walks under the named automorphisms."""
        assert symbolic_table() == EXPECTED_TABLE

    def test_render_word(self):
        """Positive letters first, inverses with exponent braces."""
        assert render_word((-1, 1, 0, 0)) == "ba^{-1}"
        assert render_word((2, 0, 0, -3)) == "a^{2}d^{-3}"
        assert render_word((0, 0, 0, 0)) == "1"

    def test_induced_pairs_for_gamma(self, cgd2_11_voltage):
        """gamma negates every fundamental voltage."""
        pairs = induced_pairs(cgd2_11_voltage, GAMMA)
        assert [t for _, t in pairs] == [(10, 0), (3, 10), (10, 3), (0, 10)]

    @pytest.mark.parametrize("fid,p,star", [
        (FamilyId.CGD2_P2, 11, 10),
        (FamilyId.CGD_P4, 3, 120),
        (FamilyId.CGD1_P2, 5, 20),
    ])
    def test_lifting_group_orders(self, fid, p, star):
        """|L*| for the three families; gamma lifts, so |L| = 2|L*|."""
        group = lifting_group(family_voltage(fid, p))
        assert group.star_order == star
        assert group.order == 2 * star
        assert group.arc_transitive
        assert group.is_closed()

    def test_lifts_are_automorphisms(self, cgd2_11_voltage):
        """Every lift of a generator preserves the cover's edges."""
        group = lifting_group(cgd2_11_voltage)
        cover = derived(cgd2_11_voltage)
        for s in group.generators():
            images = lift_to_cover(cgd2_11_voltage, s, group.matrices[s]).to_list()
            assert cover.graph.is_automorphism(images)

    def test_wrong_matrix_is_not_a_lift(self, basis_voltage_p3):
        """The identity matrix does not lift alpha."""
        with pytest.raises(NotALift):
            lift_to_cover(basis_voltage_p3, ALPHA, FpMatrix.identity(3, 4))

    def test_identity_lifts_to_identity(self, cgd2_11_voltage):
        """The identity of Dip_5 lifts via the identity matrix."""
        assert lifts(cgd2_11_voltage, IDENTITY) == FpMatrix.identity(11, 2)

    def test_fibre_preserving_group_order(self, cgd2_11_voltage):
        """p^2 translations times |L| = 121 * 20."""
        assert fibre_preserving_group(cgd2_11_voltage).order() == 2420

    def test_cover_arc_transitive(self):
        """The fibre-preserving group is arc-transitive on CGD1(5^2)."""
        assert cover_is_arc_transitive(family_voltage(FamilyId.CGD1_P2, 5))


class TestCoverIsomorphism:
    """Tests for the isomorphism criterion on voltages."""

    def test_self_isomorphic_by_identity(self, cgd2_11_voltage):
        """The first witness for z against itself is (identity, I)."""
        delta, eta = covers_isomorphic(cgd2_11_voltage, cgd2_11_voltage)
        assert delta == IDENTITY
        assert eta == FpMatrix.identity(11, 2)

    def test_cgd1_and_cgd2_differ(self, cgd2_11_voltage):
        """The two rank-2 families at p = 11 are not isomorphic covers."""
        assert covers_isomorphic(family_voltage(FamilyId.CGD1_P2, 11), cgd2_11_voltage) is None

    def test_basis_change_is_isomorphic(self):
        """Applying an invertible matrix to the voltages gives an isomorphic cover."""
        z = family_voltage(FamilyId.CGD1_P2, 5)
        m = FpMatrix(5, ((2, 1), (1, 1)))
        image = Dip5Voltage.from_vectors(5, [m.apply(v) for v in z.zeta])
        assert covers_isomorphic(z, image) is not None

    @pytest.mark.parametrize("p", [11, 19, 29])
    def test_cgd2_lambda_and_negated_lambda(self, p):
        """CGD2 built from lambda and from -lambda are isomorphic via beta."""
        lam = resolve_lambda(p)
        z1 = family_voltage(FamilyId.CGD2_P2, p, lam=lam)
        z2 = family_voltage(FamilyId.CGD2_P2, p, lam=(-lam) % p)
        assert covers_isomorphic(z1, z2) is not None
        eta = witness_for(z1, z2, BETA)
        assert eta is not None
        assert [eta.apply(v) for v in fundamental_voltages(z1)] == [t for _, t in induced_pairs(z2, BETA)]

    @pytest.mark.parametrize("p", [11, 31, 41])
    def test_cgd1_ell_and_ell_squared(self, p):
        """CGD1 built from ell and from ell^2 are isomorphic via epsilon."""
        ell = order5_units(p)[0]
        z1 = family_voltage(FamilyId.CGD1_P2, p, ell=ell)
        z2 = family_voltage(FamilyId.CGD1_P2, p, ell=ell * ell % p)
        assert covers_isomorphic(z1, z2) is not None
        eta = witness_for(z1, z2, EPSILON)
        assert eta is not None
        assert [eta.apply(v) for v in fundamental_voltages(z1)] == [t for _, t in induced_pairs(z2, EPSILON)]

    def test_rank_mismatch(self, cgd2_11_voltage, basis_voltage_p3):
        """Different (p, n) never match."""
        assert covers_isomorphic(cgd2_11_voltage, basis_voltage_p3) is None


class TestClassify:
    """Class counts of symmetric Z_p^n-covers of Dip_5."""

    @pytest.mark.parametrize("p,count", [(5, 1), (7, 0), (11, 2), (19, 1)])
    def test_rank_two_counts(self, p, count):
        """Brute-force class counts for Z_p^2."""
        assert len(classify(p, 2)) == count

    @pytest.mark.slow
    @pytest.mark.parametrize("p,count", [(29, 1), (31, 2)])
    def test_rank_two_counts_larger(self, p, count):
        """Brute-force class counts for Z_29^2 and Z_31^2."""
        assert len(classify(p, 2)) == count

    def test_rank_two_families_at_11(self):
        """Both rank-2 families appear at p = 11, CGD1 first."""
        classes = classify(11, 2)
        assert [c.matched_family for c in classes] == [FamilyId.CGD1_P2, FamilyId.CGD2_P2]
        assert [c.lifting_group_order for c in classes] == [10, 20]

    @pytest.mark.parametrize("p,count", [(5, 1), (7, 0)])
    def test_rank_three_counts(self, p, count):
        """Brute-force class counts for Z_p^3."""
        assert len(classify(p, 3)) == count

    @pytest.mark.slow
    @pytest.mark.parametrize("p,count", [(11, 1), (13, 0)])
    def test_rank_three_counts_larger(self, p, count):
        """Brute-force class counts for Z_11^3 and Z_13^3."""
        assert len(classify(p, 3)) == count

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_rank_four_single_class(self, p):
        """Exactly one class for Z_p^4, the basis voltage."""
        classes = classify(p, 4)
        assert len(classes) == 1
        assert classes[0].matched_family == FamilyId.CGD_P4

    @pytest.mark.parametrize("p,n", [(5, 2), (11, 2), (19, 2), (5, 3), (7, 3), (3, 4)])
    def test_strategies_agree(self, p, n):
        """Brute and analytic strategies give the same classes."""
        brute = classify(p, n, "brute")
        analytic = classify(p, n, "analytic")
        assert [(c.matched_family, c.lifting_group_order) for c in brute] == \
            [(c.matched_family, c.lifting_group_order) for c in analytic]

    def test_threaded_lifting_groups(self):
        """Worker threads do not change the result."""
        assert [c.to_dict() for c in classify(11, 2, workers=4)] == [c.to_dict() for c in classify(11, 2)]

    def test_bad_inputs(self):
        """Composite p and ranks outside 2..4 are refused."""
        with pytest.raises(CoverError):
            classify(9, 2)
        with pytest.raises(CoverError):
            classify(5, 5)

    def test_brute_budget(self):
        """Brute rank 3 is bounded by BRUTE_MAX_P_RANK3."""
        with pytest.raises(BudgetExceeded):
            classify(29, 3)
