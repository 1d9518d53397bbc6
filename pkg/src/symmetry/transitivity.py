"""
s-arc transitivity of pentavalent graphs and the vertex-stabilizer catalog.
"""

from dataclasses import dataclass
from typing import Optional

from .refinement import aut_group
from ..exceptions import BudgetExceeded, NotPentavalent, NotVertexTransitive
from ..graphs import Graph
from ..groups import PermGroup, tuple_orbit_transitive
from ..log import get_logger
from .. import config

logger = get_logger(__name__)

VALENCY = 5

# Vertex stabilizers of connected pentavalent (G, s)-transitive graphs
STAB_CATALOG: dict[int, tuple[tuple[str, int], ...]] = {
    1: (("Z_5", 5), ("D_5", 10), ("D_10", 20)),
    2: (("F_20", 20), ("F_20xZ_2", 40), ("A_5", 60), ("S_5", 120)),
    3: (("F_20xZ_4", 80), ("A_4xA_5", 720), ("(A_4xA_5):Z_2", 1440), ("S_4xS_5", 2880)),
    4: (("ASL(2,4)", 960), ("ASigmaL(2,4)", 1920), ("AGL(2,4)", 2880), ("AGammaL(2,4)", 5760)),
    5: (("Z_2^6:GammaL(2,4)", 23040),),
}

# 2^9 * 3^2 * 5
STABILIZER_BOUND = 23040


def catalog_names(s: int, stabilizer_order: int) -> list[str]:
    return [name for name, order in STAB_CATALOG.get(s, ()) if order == stabilizer_order]


@dataclass(frozen=True)
class SClass:
    """Largest s with Aut transitive on s-arcs, and the vertex-stabilizer order."""
    s: int
    stabilizer_order: int
    aut_order: int
    catalog: tuple[str, ...]

    @property
    def in_catalog(self) -> bool:
        return bool(self.catalog)


def arc_transitive(graph: Graph, group: Optional[PermGroup] = None) -> bool:
    """Aut(graph), or the given group, is transitive on the arcs."""
    arcs = graph.arcs()
    if not arcs:
        return False
    group = aut_group(graph) if group is None else group
    return tuple_orbit_transitive(group, arcs)


def s_class(graph: Graph, group: Optional[PermGroup] = None, max_s: int = 6) -> SClass:
    """
    Classify a pentavalent vertex-transitive graph by s-arc transitivity.

    The stabilizer of one vertex is tested on the s-arcs starting there;
    with vertex-transitivity this decides transitivity on all s-arcs.

    Raises:
        NotPentavalent: if the graph is not 5-regular
        NotVertexTransitive: if Aut is not transitive on vertices
        BudgetExceeded: if an s-arc set exceeds S_ARC_BUDGET
    """
    if graph.vertex_count == 0 or not graph.is_regular(VALENCY):
        raise NotPentavalent("graph is not 5-regular")
    group = aut_group(graph) if group is None else group
    if not group.is_transitive():
        raise NotVertexTransitive("automorphism group is not vertex-transitive")

    v = group.base[0]
    stabilizer = group.subgroup_fixing_base_prefix(1)
    s = 0
    for t in range(1, max_s + 1):
        arcs = graph.s_arcs_from(v, t)
        if len(arcs) > config.S_ARC_BUDGET:
            raise BudgetExceeded(f"{len(arcs)} {t}-arcs exceed S_ARC_BUDGET")
        if not tuple_orbit_transitive(stabilizer, arcs):
            break
        s = t

    aut_order = group.order()
    stabilizer_order = aut_order // graph.vertex_count
    names = tuple(catalog_names(s, stabilizer_order))
    if s and not names:
        logger.warning(f"[!] stabilizer order {stabilizer_order} is not listed for s = {s}")
    return SClass(s, stabilizer_order, aut_order, names)
