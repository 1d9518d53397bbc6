"""
Basic graphs, normal quotients and recognition of the named families.

A pentavalent symmetric graph is basic when no nontrivial normal subgroup of
its automorphism group has more than two orbits. Groups within the element
budget are searched through all normal subgroups. Larger groups are handled
through a normal elementary abelian translation subgroup T: its invariant
subspaces under conjugation are exactly the normal subgroups of A inside T,
and when T is a Sylow subgroup of A every minimal normal subgroup lies in it.
"""

from dataclasses import dataclass, field
from typing import Optional

from .lattice import invariant_closure, lattice_of
from .refinement import aut_group, isomorphic
from ..algebra import prime_factors
from ..exceptions import (
    ConstructionError,
    NotAbelian,
    NotBipartite,
    NotSemiregular,
    OrbitsNotParts,
    Unsupported,
)
from ..graphs import Graph
from ..graphs.constructions import (
    FamilyId,
    RECOGNITION_ORDER,
    cayley,
    family,
    format_family_id,
)
from ..groups import (
    GDElement,
    GroupSpec,
    PermGroup,
    is_normal,
    normal_subgroups,
)
from ..log import get_logger
from .. import config

logger = get_logger(__name__)


@dataclass
class BasicVerdict:
    """Outcome of the basicness test, with a normal subgroup witness when non-basic."""
    basic: bool
    witness: Optional[PermGroup] = None
    method: str = "normal-subgroups"

    @property
    def witness_order(self) -> Optional[int]:
        return self.witness.order() if self.witness is not None else None

    @property
    def witness_orbits(self) -> Optional[list[list[int]]]:
        return self.witness.orbits() if self.witness is not None else None


def _p_part(order: int, p: int) -> int:
    part = 1
    while order % p == 0:
        order //= p
        part *= p
    return part


def _by_normal_subgroups(group: PermGroup, budget: Optional[int]) -> BasicVerdict:
    witnesses = [
        n for n in normal_subgroups(group, budget)
        if not n.is_trivial() and len(n.orbits()) > 2
    ]
    if not witnesses:
        return BasicVerdict(True)
    largest = max(witnesses, key=lambda n: n.order())
    return BasicVerdict(False, largest)


def _by_translations(group: PermGroup, translations: PermGroup) -> BasicVerdict:
    if not is_normal(group, translations):
        raise Unsupported("translation subgroup is not normal in Aut")
    lattice = lattice_of(translations)
    matrices = [lattice.action_matrix(g) for g in group.generators]
    best: Optional[list] = None
    for line in lattice.lines():
        span = invariant_closure(line, matrices, lattice.p)
        if len(span) < lattice.n and (best is None or len(span) > len(best)):
            best = span
    if best is not None:
        return BasicVerdict(False, lattice.subgroup(best), "translations")
    if _p_part(group.order(), lattice.p) != translations.order():
        raise Unsupported("translation subgroup is not a Sylow subgroup of Aut")
    return BasicVerdict(True, None, "translations")


def is_basic(graph: Graph, group: Optional[PermGroup] = None,
             translations: Optional[PermGroup] = None,
             element_budget: Optional[int] = None) -> BasicVerdict:
    """
    Decide whether a pentavalent symmetric graph is basic.

    Args:
        graph: the graph
        group: Aut(graph), computed when omitted
        translations: a normal elementary abelian subgroup with two orbits,
            used when |Aut| is over the element budget
        element_budget: override for ELEMENT_BUDGET

    Raises:
        Unsupported: when neither method applies
    """
    group = aut_group(graph) if group is None else group
    budget = config.ELEMENT_BUDGET if element_budget is None else element_budget
    if group.order() <= budget:
        return _by_normal_subgroups(group, budget)
    if translations is None:
        raise Unsupported(f"|Aut| = {group.order()} is over budget and no translation subgroup was given")
    return _by_translations(group, translations)


# =============================================================================
# RECOGNITION
# =============================================================================

def _prime_power(m: int) -> Optional[tuple[int, int]]:
    primes = prime_factors(m) if m > 1 else []
    if len(primes) != 1:
        return None
    p, e = primes[0], 0
    while m > 1:
        m //= p
        e += 1
    return p, e


def _candidates(graph: Graph) -> list[tuple[FamilyId, Optional[int]]]:
    n = graph.vertex_count
    found: list[tuple[FamilyId, Optional[int]]] = []
    half = _prime_power(n // 2) if n % 2 == 0 else None
    for fid in RECOGNITION_ORDER:
        if fid == FamilyId.K6 and n == 6:
            found.append((fid, None))
        elif fid == FamilyId.FQN and n > 2 and n & (n - 1) == 0:
            k = n.bit_length() - 1
            if graph.is_regular(k + 1):
                found.append((fid, k))
        elif half is not None:
            p, e = half
            wanted = {FamilyId.CD_P: 1, FamilyId.CGD1_P2: 2, FamilyId.CGD2_P2: 2,
                      FamilyId.CGD_P3: 3, FamilyId.CGD_P4: 4}.get(fid)
            if wanted == e:
                found.append((fid, p))
    return found


def recognize(graph: Graph, max_vertices: Optional[int] = None) -> Optional[tuple[FamilyId, Optional[int]]]:
    """First family (in recognition order) isomorphic to the graph."""
    for fid, parameter in _candidates(graph):
        try:
            candidate = family(fid, parameter)
        except ConstructionError:
            continue
        if candidate.graph.edge_count != graph.edge_count:
            continue
        if isomorphic(graph, candidate.graph, max_vertices) is not None:
            return fid, parameter
    return None


# =============================================================================
# NORMAL QUOTIENTS
# =============================================================================

@dataclass
class QuotientStep:
    normal_order: int
    graph: Graph
    family: Optional[FamilyId] = None
    parameter: Optional[int] = None

    @property
    def name(self) -> Optional[str]:
        return format_family_id(self.family, self.parameter) if self.family else None


def basic_quotient_chain(graph: Graph, group: Optional[PermGroup] = None,
                         translations: Optional[PermGroup] = None) -> list[QuotientStep]:
    """
    Quotient by the largest found semiregular normal subgroup with more than two orbits until basic.

    The final quotient is matched against the named families. A basic graph
    gives an empty chain.

    Raises:
        NotSemiregular: if a witness does not act semiregularly
        Unsupported: as is_basic
    """
    steps: list[QuotientStep] = []
    current = graph
    while True:
        verdict = is_basic(current, group, translations)
        if verdict.basic:
            break
        witness = verdict.witness
        if not witness.is_semiregular():
            raise NotSemiregular(f"normal subgroup of order {witness.order()} is not semiregular")
        current = current.quotient(witness.orbits())
        steps.append(QuotientStep(witness.order(), current))
        logger.info(f"[*] quotient by order {witness.order()}: {current.vertex_count} vertices")
        group, translations = None, None
    if steps:
        recognized = recognize(steps[-1].graph)
        if recognized is not None:
            steps[-1].family, steps[-1].parameter = recognized
    return steps


# =============================================================================
# CAYLEY STRUCTURE FROM A SEMIREGULAR ABELIAN GROUP
# =============================================================================

@dataclass
class GDRecognition:
    """GD_H Cayley structure found on a bipartite graph; ``labels[v]`` is v's element index."""
    group: GroupSpec
    connection: tuple[GDElement, ...]
    labels: list[int] = field(default_factory=list)
    involution_is_automorphism: bool = False


def _coordinates(h: PermGroup, origin: int) -> tuple[GroupSpec, dict[int, tuple[int, ...]]]:
    order = h.order()
    for g in h.generators:
        if g.order() == order:
            coords: dict[int, tuple[int, ...]] = {}
            x = origin
            for k in range(order):
                coords[x] = (k,)
                x = g(x)
            return GroupSpec.over(order), coords
    lattice = lattice_of(h, origin)
    return GroupSpec.over(*([lattice.p] * lattice.n)), lattice.coords


def gd_recognize(graph: Graph, h: PermGroup) -> GDRecognition:
    """
    Recover Cay(GD_H, S) from a bipartite graph and a semiregular abelian group.

    Part B_1 (holding vertex 0) gets labels (-x, 0) and part B_2 gets (y, 1),
    where x and y are coordinates of H acting from vertex 0 and from its
    smallest neighbor.

    Raises:
        NotBipartite, NotAbelian, NotSemiregular, OrbitsNotParts
    """
    parts = graph.bipartition()
    if parts is None:
        raise NotBipartite("graph is not bipartite")
    if not h.is_abelian():
        raise NotAbelian("group is not abelian")
    if not h.is_semiregular():
        raise NotSemiregular("group is not semiregular")
    if sorted(map(sorted, h.orbits())) != sorted(map(sorted, parts)):
        raise OrbitsNotParts("orbits of the group are not the two parts")

    origin = 0
    other = graph.neighbors(origin)[0]
    spec, coords_u = _coordinates(h, origin)
    _, coords_v = _coordinates(h, other)
    moduli = spec.h_spec.moduli
    # same generators from both origins

    def neg(x: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-c) % m for c, m in zip(x, moduli))

    labels = [0] * graph.vertex_count
    for v, x in coords_u.items():
        labels[v] = spec.index(spec.element(neg(x), 0))
    for v, y in coords_v.items():
        labels[v] = spec.index(spec.element(y, 1))
    connection = tuple(spec.element(coords_v[w], 1) for w in graph.neighbors(origin))

    if graph.relabel(labels) != cayley(spec, connection):
        raise ConstructionError("recovered labels do not give the Cayley graph")
    swap = [0] * graph.vertex_count
    by_coords_v = {y: v for v, y in coords_v.items()}
    by_coords_u = {x: v for v, x in coords_u.items()}
    for v, x in coords_u.items():
        swap[v] = by_coords_v[neg(x)]
    for v, y in coords_v.items():
        swap[v] = by_coords_u[neg(y)]
    return GDRecognition(spec, connection, labels, graph.is_automorphism(swap))
