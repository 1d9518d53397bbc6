"""
Analysis Service - Builds graphs, computes their symmetry and produces reports.

Automorphism groups of named family instances are cached per instance key so
that repeated requests from the API do not redo the search.
"""

import threading
from math import inf
from typing import Optional

from ..covers import CoverClass, classify
from ..exceptions import Unsupported
from ..graphs import Graph
from ..graphs.constructions import FamilyId, NamedGraph, family, parse_family_id
from ..groups import PermGroup
from ..log import get_logger
from ..reports import (
    CensusGraph,
    CensusReport,
    CoverClassList,
    CoverClassModel,
    QuotientChain,
    QuotientStep,
    SymmetryReport,
    VoltageModel,
)
from ..symmetry import aut_group, basic_quotient_chain, census_2p2, s_class, translations_of

logger = get_logger(__name__)

SYLOW_NOTE = "Sylow-normalizer orders N_A(P) are stated, not computed"

# Families whose order is 2p^n with p the family parameter
_PRIME_POWER_FAMILIES = (
    FamilyId.CD_P,
    FamilyId.CD_P2,
    FamilyId.CGD1_P2,
    FamilyId.CGD2_P2,
    FamilyId.CGD_P3,
    FamilyId.CGD_P4,
)


def _instance_key(ng: NamedGraph) -> str:
    params = ",".join(f"{k}={v}" for k, v in sorted(ng.params.items()))
    return f"{ng.name}[{params}]"


def cover_class_model(c: CoverClass) -> CoverClassModel:
    data = c.to_dict()
    return CoverClassModel(
        representative=VoltageModel(**data["representative"]),
        lifting_group_order=data["lifting_group_order"],
        arc_transitive=data["arc_transitive"],
        matched_family=data["matched_family"],
    )


def _class_summary(classes: list[CoverClass]) -> list[tuple]:
    return [(c.matched_family, c.lifting_group_order, c.arc_transitive) for c in classes]


class AnalysisService:
    """
    Service layer for graph analysis.
    Keeps a per-instance cache of automorphism groups.
    """

    def __init__(self, max_vertices: Optional[int] = None):
        self.max_vertices = max_vertices
        self._lock = threading.Lock()
        self._groups: dict[str, PermGroup] = {}

    # =========================================================================
    # CONSTRUCTION AND CACHING
    # =========================================================================

    def named(self, family_id: str, p: Optional[int] = None, ell: Optional[int] = None,
              lam: Optional[int] = None) -> NamedGraph:
        """Resolve a family id (template or instance string) and construct it."""
        fid, parsed = parse_family_id(family_id)
        return family(fid, parsed if parsed is not None else p, ell=ell, lam=lam)

    def group_of(self, ng: NamedGraph, max_vertices: Optional[int] = None) -> PermGroup:
        key = _instance_key(ng)
        with self._lock:
            cached = self._groups.get(key)
        if cached is not None:
            return cached
        logger.info(f"[*] Computing Aut({ng.name}) on {ng.graph.vertex_count} vertices")
        group = aut_group(ng.graph, max_vertices or self.max_vertices)
        with self._lock:
            self._groups[key] = group
        return group

    def cached_keys(self) -> list[str]:
        with self._lock:
            return sorted(self._groups)

    def clear_cache(self) -> None:
        with self._lock:
            self._groups.clear()

    # =========================================================================
    # REPORTS
    # =========================================================================

    def analyze_graph(self, graph: Graph, name: Optional[str] = None,
                      group: Optional[PermGroup] = None,
                      translations: Optional[PermGroup] = None,
                      notes: Optional[list[str]] = None) -> SymmetryReport:
        """
        Aut order, girth, s-class, basicness and the recognized basic quotient.

        Basicness is left unset (with a note) when neither basicness test applies.
        """
        group = aut_group(graph, self.max_vertices) if group is None else group
        sc = s_class(graph, group)
        girth = graph.girth()
        notes = list(notes or [])

        basic: Optional[bool] = None
        witness_order: Optional[int] = None
        quotient: Optional[str] = None
        try:
            chain = basic_quotient_chain(graph, group, translations)
            basic = not chain
            if chain:
                witness_order = chain[0].normal_order
                quotient = chain[-1].name
        except Unsupported as e:
            notes.append(f"basicness undecided: {e}")
            logger.warning(f"[!] Basicness of {name or 'graph'} undecided: {e}")

        return SymmetryReport(
            family=name,
            vertices=graph.vertex_count,
            aut_order=sc.aut_order,
            girth=None if girth == inf else int(girth),
            s=sc.s,
            stabilizer_order=sc.stabilizer_order,
            catalog=list(sc.catalog),
            basic=basic,
            witness_order=witness_order,
            quotient=quotient,
            notes=notes,
        )

    def analyze(self, family_id: str, p: Optional[int] = None, ell: Optional[int] = None,
                lam: Optional[int] = None, max_vertices: Optional[int] = None) -> SymmetryReport:
        ng = self.named(family_id, p, ell=ell, lam=lam)
        group = self.group_of(ng, max_vertices)
        notes = [SYLOW_NOTE] if ng.family in _PRIME_POWER_FAMILIES else []
        return self.analyze_graph(ng.graph, ng.name, group, translations_of(ng), notes)

    def quotient(self, family_id: str, p: Optional[int] = None, ell: Optional[int] = None,
                 lam: Optional[int] = None) -> QuotientChain:
        ng = self.named(family_id, p, ell=ell, lam=lam)
        chain = basic_quotient_chain(ng.graph, self.group_of(ng), translations_of(ng))
        return QuotientChain(
            family=ng.name,
            vertices=ng.graph.vertex_count,
            basic=not chain,
            steps=[QuotientStep(normal_order=s.normal_order, vertices=s.graph.vertex_count, family=s.name)
                   for s in chain],
        )

    def quotient_graph(self, graph: Graph) -> QuotientChain:
        chain = basic_quotient_chain(graph, aut_group(graph, self.max_vertices))
        return QuotientChain(
            vertices=graph.vertex_count,
            basic=not chain,
            steps=[QuotientStep(normal_order=s.normal_order, vertices=s.graph.vertex_count, family=s.name)
                   for s in chain],
        )

    def classify(self, p: int, n: int, strategy: str = "brute") -> CoverClassList:
        """
        Cover classes for one strategy, or for both with an agreement flag.
        """
        if strategy == "both":
            brute = classify(p, n, "brute")
            analytic = classify(p, n, "analytic")
            agree = _class_summary(brute) == _class_summary(analytic)
            if not agree:
                logger.warning(f"[!] Strategies disagree at p={p}, n={n}")
            return CoverClassList(p=p, n=n, strategy=strategy,
                                  classes=[cover_class_model(c) for c in brute],
                                  strategies_agree=agree)
        classes = classify(p, n, strategy)
        return CoverClassList(p=p, n=n, strategy=strategy, classes=[cover_class_model(c) for c in classes])

    def census(self, p: int) -> CensusReport:
        report = census_2p2(p)
        return CensusReport(
            p=report.p,
            count=report.count,
            graphs=[CensusGraph(family=e.family, vertices=e.vertices, aut_order=e.aut_order,
                                s=e.s, stabilizer_order=e.stabilizer_order) for e in report.graphs],
            pairwise_non_isomorphic=report.pairwise_non_isomorphic,
            notes=report.notes,
        )
