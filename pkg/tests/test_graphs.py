"""Tests for the Graph type, the edge-list format and the named families."""

import networkx as nx
import pytest

from src.exceptions import (
    Disconnected,
    GraphError,
    GraphFormatError,
    IdentityInS,
    IntraCellEdge,
    LoopEdge,
    NoOrder5Element,
    NoSquareRootOf5,
    NotAPath,
    NotSymmetricSet,
    UnknownFamily,
    UnsupportedParameter,
    VertexOutOfRange,
)
from src.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    count_cycles_through_path,
    cycle_graph,
    iter_two_regular_graphs,
    parse_edge_list,
)
from src.graphs.constructions import (
    FamilyId,
    cayley,
    family,
    family_available,
    family_parameters,
    folded_hypercube,
    format_family_id,
    hypercube,
    hypercube_antipodal_cells,
    normalizer_group,
    order5_units,
    parse_family_id,
)
from src.groups import GroupSpec, inverse


class TestGraphBasics:
    """Tests for construction and simple queries."""

    def test_build_drops_duplicates(self):
        """Repeated edges collapse."""
        g = Graph.build(3, [(0, 1), (1, 0), (1, 2)])
        assert g.edge_count == 2
        assert g.neighbors(1) == (0, 2)

    def test_build_rejects_loops(self):
        """Loops are not simple."""
        with pytest.raises(LoopEdge):
            Graph.build(2, [(1, 1)])

    def test_build_rejects_out_of_range(self):
        """Endpoints must be vertices."""
        with pytest.raises(VertexOutOfRange):
            Graph.build(2, [(0, 2)])

    def test_neighbor_lists_must_be_symmetric(self):
        """u in N(v) requires v in N(u)."""
        with pytest.raises(GraphError):
            Graph.from_neighbor_lists([[1], []])

    def test_regularity_and_arcs(self, k6):
        """K6 is 5-regular with 30 arcs."""
        assert k6.is_regular(5)
        assert len(k6.arcs()) == 30
        assert len(k6.s_arcs_from(0, 2)) == 20

    def test_complement(self, c6):
        """The complement of C6 has 15 - 6 edges."""
        assert c6.complement().edge_count == 9

    def test_equality_by_adjacency(self):
        """Graphs with the same adjacency are equal."""
        assert cycle_graph(5) == Graph.build(5, [(4, 0), (0, 1), (1, 2), (2, 3), (3, 4)])


class TestGraphMetrics:
    """Girth, bipartiteness and connectivity against networkx."""

    @pytest.mark.parametrize("name,expected", [("k6", 3), ("k55", 4), ("c6", 6), ("petersen", 5)])
    def test_girth(self, request, name, expected):
        """Shortest cycle lengths of small graphs."""
        assert request.getfixturevalue(name).girth() == expected

    def test_forest_girth_is_infinite(self):
        """A path has no cycle."""
        assert Graph.build(3, [(0, 1), (1, 2)]).girth() == float("inf")

    def test_petersen_fixture(self, petersen):
        """The fixture is the Petersen graph."""
        assert nx.is_isomorphic(petersen.to_networkx(), nx.petersen_graph())

    @pytest.mark.parametrize("name", ["k6", "k55", "c6", "petersen"])
    def test_bipartition_matches_networkx(self, request, name):
        """Our 2-coloring exists exactly when networkx says bipartite."""
        g = request.getfixturevalue(name)
        assert (g.bipartition() is not None) == nx.is_bipartite(g.to_networkx())

    def test_bipartition_parts(self, c6):
        """Vertex 0 goes in the first part."""
        assert c6.bipartition() == ([0, 2, 4], [1, 3, 5])

    def test_bipartition_requires_connected(self):
        """Disconnected graphs are refused."""
        with pytest.raises(Disconnected):
            Graph.build(4, [(0, 1), (2, 3)]).bipartition()

    def test_components(self):
        """Components match networkx."""
        g = Graph.build(5, [(0, 1), (2, 3), (3, 4)])
        assert sorted(map(sorted, g.components())) == sorted(
            sorted(c) for c in nx.connected_components(g.to_networkx())
        )
        assert not g.is_connected()


class TestCyclesAndQuotients:
    """Cycle counting through paths and partition quotients."""

    def test_cycles_through_path_in_c6(self, c6):
        """C6 has a single 6-cycle through any 2-arc."""
        assert c6.cycles_through_path([0, 1, 2], 6) == 1
        assert c6.cycles_through_path([0, 1, 2], 4) == 0

    def test_four_cycles_in_k33(self):
        """In K_{3,3} two 4-cycles pass through a 2-arc."""
        assert complete_bipartite(3, 3).cycles_through_path([0, 3, 1], 4) == 2

    def test_not_a_path(self, c6):
        """Non-adjacent or backtracking sequences are refused."""
        with pytest.raises(NotAPath):
            c6.cycles_through_path([0, 2], 6)
        with pytest.raises(NotAPath):
            c6.cycles_through_path([0, 1, 0], 6)

    def test_implicit_graph(self):
        """The neighbor-function form works without a Graph."""
        def neighbors(v):
            return [(v + 1) % 7, (v - 1) % 7]
        assert count_cycles_through_path(neighbors, [0, 1, 2], 7) == 1

    def test_quotient(self, c6):
        """Antipodal cells of C6 give a triangle."""
        assert c6.quotient([[0, 3], [1, 4], [2, 5]]) == complete_graph(3)

    def test_quotient_with_internal_edge(self, c6):
        """Cells must be independent sets."""
        with pytest.raises(IntraCellEdge):
            c6.quotient([[0, 1], [2, 3], [4, 5]])

    def test_relabel_and_automorphism(self, c6):
        """Rotation is an automorphism and relabels C6 onto itself."""
        rotation = [(v + 1) % 6 for v in range(6)]
        assert c6.is_automorphism(rotation)
        assert c6.relabel(rotation) == c6
        assert not c6.is_automorphism([0, 2, 1, 3, 4, 5])

    def test_two_regular_graphs(self):
        """Cycle-length partitions of 8 with parts >= 3: 8, 5+3, 4+4."""
        graphs = list(iter_two_regular_graphs(8))
        assert len(graphs) == 3
        assert all(g.is_regular(2) for g in graphs)


class TestEdgeListFormat:
    """Tests for the text format shared by the CLI and the API."""

    def test_round_trip(self, petersen):
        """Parsing the rendered text gives the same graph."""
        text = petersen.to_edge_list_text()
        assert text.splitlines()[:2] == ["p2pg-graph v1", "10 15"]
        assert parse_edge_list(text) == petersen

    def test_bad_header(self):
        """Unknown headers are refused."""
        with pytest.raises(GraphFormatError):
            parse_edge_list("graph\n2 1\n0 1\n")

    def test_edge_count_mismatch(self):
        """The declared edge count must match."""
        with pytest.raises(GraphFormatError):
            parse_edge_list("p2pg-graph v1\n3 2\n0 1\n")

    def test_malformed_line(self):
        """Edge lines hold two integers."""
        with pytest.raises(GraphFormatError):
            parse_edge_list("p2pg-graph v1\n3 1\n0 x\n")


class TestFamilyIds:
    """Parsing and formatting of family ids and instance strings."""

    @pytest.mark.parametrize("text,expected", [
        ("K6", (FamilyId.K6, None)),
        ("Q4", (FamilyId.QN, 4)),
        ("FQ<n>", (FamilyId.FQN, None)),
        ("CD(p)", (FamilyId.CD_P, None)),
        ("CD(11)", (FamilyId.CD_P, 11)),
        ("CD(5^2)", (FamilyId.CD_P2, 5)),
        ("CGD1(11^2)", (FamilyId.CGD1_P2, 11)),
        ("CGD2(p^2)", (FamilyId.CGD2_P2, None)),
        ("CGD(5^3)", (FamilyId.CGD_P3, 5)),
        ("CGD(p^4)", (FamilyId.CGD_P4, None)),
    ])
    def test_parse(self, text, expected):
        """Templates carry no parameter, instances do."""
        assert parse_family_id(text) == expected

    @pytest.mark.parametrize("text", ["K7", "CGD(5^2)", "CD", "CGD1(x^2)"])
    def test_parse_unknown(self, text):
        """Unknown heads, exponents and parameters are refused."""
        with pytest.raises(UnknownFamily):
            parse_family_id(text)

    def test_format(self):
        """Instances substitute the parameter."""
        assert format_family_id(FamilyId.CGD_P3, 5) == "CGD(5^3)"
        assert format_family_id(FamilyId.CD_P, 11) == "CD(11)"
        assert format_family_id(FamilyId.FQN, 4) == "FQ4"
        assert format_family_id(FamilyId.CGD2_P2) == "CGD2(p^2)"


class TestFamilies:
    """Tests for the named pentavalent families."""

    @pytest.mark.parametrize("name,parameter,order", [
        ("K6", None, 6), ("FQ4", None, 16), ("CD(11)", None, 22), ("CD(11^2)", None, 242),
        ("CGD1(5^2)", None, 50), ("CGD2(11^2)", None, 242), ("CGD(5^3)", None, 250), ("CGD(p^4)", 2, 32),
    ])
    def test_pentavalent_and_connected(self, name, parameter, order):
        """Every family member is connected, 5-regular and of order 2p^n."""
        ng = family(name, parameter)
        assert ng.graph.vertex_count == order
        assert ng.graph.is_regular(5)
        assert ng.graph.is_connected()

    def test_cd5_is_k55(self, k55):
        """All five reflections of D_10 give K_{5,5}."""
        assert nx.is_isomorphic(family("CD(5)").graph.to_networkx(), k55.to_networkx())

    def test_cayley_adjacency_rule(self):
        """v ~ u exactly when v u^-1 lies in S."""
        ng = family("CGD1(5^2)")
        members = set(ng.connection)
        for u, v in ng.graph.edges():
            assert ng.label(v) * inverse(ng.label(u)) in members

    def test_cgd1_connection_at_five(self):
        """At p = 5 the order-5 unit is 1."""
        ng = family("CGD1(5^2)")
        assert ng.params == {"ell": 1}
        assert [x.h_part.components for x in ng.connection] == [(0, 0), (1, 0), (3, 1), (1, 3), (0, 1)]

    def test_cgd2_exponent(self):
        """lambda = 4 and i = 8 at p = 11."""
        ng = family("CGD2(11^2)")
        assert ng.params == {"lam": 4, "i": 8}
        assert [x.h_part.components for x in ng.connection] == [(0, 0), (1, 0), (8, 1), (1, 8), (0, 1)]

    def test_cd_p2_needs_five_to_divide_p_minus_one(self):
        """CD(p^2) exists only when 5 divides p - 1, so p = 5 is refused."""
        with pytest.raises(NoOrder5Element):
            family(FamilyId.CD_P2, 5)
        assert not family_available(FamilyId.CD_P2, 5)
        assert family_parameters(FamilyId.CD_P2, 11) == {"ell": 3}

    def test_ell_override(self):
        """Every order-5 unit is accepted; other units are refused."""
        assert family("CD(11)", ell=4).params == {"ell": 4}
        with pytest.raises(NoOrder5Element):
            family("CD(11)", ell=2)

    def test_missing_order_five_unit(self):
        """CD(7) needs a unit of order 5 modulo 7."""
        with pytest.raises(NoOrder5Element):
            family("CD(7)")

    def test_missing_square_root(self):
        """CGD2(7^2) needs a square root of 5 modulo 7."""
        with pytest.raises(NoSquareRootOf5):
            family("CGD2(7^2)")

    def test_composite_parameter(self):
        """Parameters must be prime."""
        with pytest.raises(UnsupportedParameter):
            family("CD(15)")

    def test_availability(self):
        """Availability follows the arithmetic prerequisites."""
        assert family_available(FamilyId.CD_P, 11)
        assert not family_available(FamilyId.CD_P, 7)
        assert family_available(FamilyId.CGD2_P2, 11)
        assert not family_available(FamilyId.CGD2_P2, 5)
        assert family_available(FamilyId.CGD_P4, 2)
        assert not family_available(FamilyId.CGD_P3, 2)

    def test_order5_units(self):
        """Only 1 at p = 5; the four order-5 units at p = 11."""
        assert order5_units(5) == [1]
        assert order5_units(11) == [3, 4, 5, 9]

    def test_cube_families(self):
        """Q_n and FQ_n sizes and antipodal cells."""
        assert hypercube(3).is_regular(3)
        assert folded_hypercube(4).is_regular(5)
        assert len(hypercube_antipodal_cells(4)) == 8
        with pytest.raises(UnsupportedParameter):
            folded_hypercube(1)

    def test_k6_has_no_labels(self):
        """Only generalized dihedral families have group labels."""
        with pytest.raises(UnsupportedParameter):
            family("K6").label(0)

    def test_cayley_rejects_identity(self):
        """The identity is not allowed in S."""
        g = GroupSpec.over(5)
        with pytest.raises(IdentityInS):
            cayley(g, [g.identity()])

    def test_cayley_rejects_non_symmetric(self):
        """S must be closed under inverses."""
        g = GroupSpec.over(5)
        with pytest.raises(NotSymmetricSet):
            cayley(g, [g.element((1,), 0)])

    def test_normalizer_of_cgd2(self):
        """R(G) x| Aut(G, S) has order 242 * 10 for CGD2(11^2)."""
        assert normalizer_group(family("CGD2(11^2)")).order() == 2420
