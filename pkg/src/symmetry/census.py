"""
The order-2p^2 census and the supplementary structural checks.
"""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional

from .lattice import translations_of
from .refinement import aut_group, isomorphic
from .transitivity import s_class
from ..algebra import is_prime
from ..exceptions import BudgetExceeded, UnsupportedParameter
from ..graphs import Graph, count_cycles_through_path, iter_two_regular_graphs
from ..graphs.constructions import (
    FamilyId,
    cayley_neighbors,
    connection_h_parts,
    family,
    family_available,
    family_parameters,
    group_for,
    normalizer_group,
)
from ..groups import GDElement, GroupSpec, PermGroup, aut_fixing_s, inverse
from ..log import get_logger
from .. import config

logger = get_logger(__name__)

CENSUS_FAMILIES = (FamilyId.CGD1_P2, FamilyId.CGD2_P2, FamilyId.CD_P2)

COMPLETENESS_NOTE = (
    "completeness of the family list is not checked; no exhaustive search over order 2p^2 is run"
)


@dataclass
class CensusEntry:
    family: str
    vertices: int
    aut_order: int
    s: int
    stabilizer_order: int


@dataclass
class CensusReport:
    p: int
    graphs: list[CensusEntry] = field(default_factory=list)
    pairwise_non_isomorphic: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.graphs)


def census_2p2(p: int, max_p: Optional[int] = None) -> CensusReport:
    """
    Build every family of order 2p^2 whose arithmetic condition holds at p,
    confirm each is symmetric and that no two are isomorphic.

    Raises:
        BudgetExceeded: if p is above CENSUS_MAX_P
        UnsupportedParameter: if p is not a prime
    """
    limit = config.CENSUS_MAX_P if max_p is None else max_p
    if not is_prime(p):
        raise UnsupportedParameter(f"{p} is not a prime")
    if p > limit:
        raise BudgetExceeded(f"census is limited to p <= {limit}")

    report = CensusReport(p, notes=[COMPLETENESS_NOTE])
    graphs: list[Graph] = []
    for fid in CENSUS_FAMILIES:
        if not family_available(fid, p):
            continue
        ng = family(fid, p)
        group = aut_group(ng.graph)
        sc = s_class(ng.graph, group)
        if sc.s < 1:
            logger.warning(f"[!] {ng.name} is not arc-transitive")
            continue
        report.graphs.append(CensusEntry(ng.name, ng.graph.vertex_count, sc.aut_order, sc.s, sc.stabilizer_order))
        graphs.append(ng.graph)
        logger.info(f"[+] {ng.name}: |Aut| = {sc.aut_order}, s = {sc.s}")

    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            if isomorphic(graphs[i], graphs[j]) is not None:
                report.pairwise_non_isomorphic = False
    return report


# =============================================================================
# SUPPLEMENTARY CHECKS
# =============================================================================

def _group_and_connection(family_id: FamilyId, p: int, ell: Optional[int] = None) -> tuple[GroupSpec, tuple[GDElement, ...]]:
    """Group and connection set of a family without building the Cayley graph."""
    params = family_parameters(family_id, p, ell=ell)
    group = group_for(family_id, p)
    return group, tuple(group.element(x, 1) for x in connection_h_parts(family_id, p, params))


def six_cycles_through_three_arc(family_id: FamilyId, p: int, ell: Optional[int] = None) -> int:
    """
    Number of 6-cycles through the 3-arc (1, h, a, a^-1 h) of a GD Cayley graph.

    h = (0, 1) and a = (e_1, 0); the graph is explored through its neighbor
    rule only, so large instances need no adjacency lists.
    """
    if family_id not in (FamilyId.CGD_P3, FamilyId.CGD_P4):
        raise UnsupportedParameter(f"{family_id.value} has no rank-3 or rank-4 translation part")
    group, connection = _group_and_connection(family_id, p, ell)
    rank = group.h_spec.rank
    e1 = tuple(1 if k == 0 else 0 for k in range(rank))
    path = [
        group.identity(),
        group.element((0,) * rank, 1),
        group.element(e1, 0),
        group.element(tuple(-x for x in e1), 1),
    ]
    members = set(connection)
    return count_cycles_through_path(
        cayley_neighbors(group, connection),
        path,
        6,
        adjacent=lambda u, v: v * inverse(u) in members,
    )


def no_six_cycles_through_three_arc(family_id: FamilyId, p: int, ell: Optional[int] = None) -> bool:
    return six_cycles_through_three_arc(family_id, p, ell) == 0


def brute_force_automorphisms(graph: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by trying every permutation (small graphs only)."""
    if graph.vertex_count > 9:
        raise BudgetExceeded("brute-force automorphisms are limited to 9 vertices")
    return [pi for pi in permutations(range(graph.vertex_count)) if graph.is_automorphism(pi)]


def brute_force_arc_transitive(graph: Graph) -> bool:
    arcs = graph.arcs()
    if not arcs:
        return False
    autos = brute_force_automorphisms(graph)
    start = arcs[0]
    return {(pi[start[0]], pi[start[1]]) for pi in autos} == set(arcs)


def order_eight_pentavalent_check() -> list[tuple[str, bool]]:
    """Complements of the 2-regular graphs on 8 vertices, each with its arc-transitivity."""
    results = []
    for g in iter_two_regular_graphs(8):
        name = "+".join(f"C_{len(c)}" for c in g.components())
        complement = g.complement()
        results.append((name, complement.is_regular(5) and brute_force_arc_transitive(complement)))
    return results


def order_p_subgroup_count(translations: PermGroup) -> int:
    """Number of subgroups of prime order p in an elementary abelian p-group."""
    keys = set()
    for x in translations.elements():
        if x.is_identity():
            continue
        powers = set()
        y = x
        while not y.is_identity():
            powers.add(y.key())
            y = y * x
        keys.add(frozenset(powers))
    return len(keys)


def lattice_line_count(p: int) -> int:
    """Order-p subgroups of the rank-2 translation group of CGD1(p^2)."""
    ng = family(FamilyId.CGD1_P2, p)
    return order_p_subgroup_count(translations_of(ng))


@dataclass
class NormalizerCheck:
    family: str
    normalizer_order: int
    expected_order: int
    aut_order: int
    generators_are_automorphisms: bool

    @property
    def divides(self) -> bool:
        return self.aut_order % self.normalizer_order == 0

    @property
    def equal(self) -> bool:
        return self.aut_order == self.normalizer_order


def normalizer_matches_aut(family_id: FamilyId, p: int, group: Optional[PermGroup] = None) -> NormalizerCheck:
    """Compare R(G) x| Aut(G, S) with the full automorphism group."""
    ng = family(family_id, p)
    normalizer = normalizer_group(ng)
    expected = ng.group.order * aut_fixing_s(ng.group, ng.connection).order
    full = aut_group(ng.graph) if group is None else group
    return NormalizerCheck(
        ng.name,
        normalizer.order(),
        expected,
        full.order(),
        all(ng.graph.is_automorphism(g.to_list()) for g in normalizer.generators),
    )
