"""
Simple graphs, Cayley graphs on generalized dihedral groups and the named families.
"""

from .graph import (
    EDGE_LIST_HEADER,
    Graph,
    parse_edge_list,
    count_cycles_through_path,
    cycle_graph,
    complete_graph,
    complete_bipartite,
    disjoint_union,
    iter_two_regular_graphs,
)

__all__ = [
    'EDGE_LIST_HEADER',
    'Graph',
    'parse_edge_list',
    'count_cycles_through_path',
    'cycle_graph',
    'complete_graph',
    'complete_bipartite',
    'disjoint_union',
    'iter_two_regular_graphs',
]
