"""
Automorphism groups, s-arc transitivity, basicness and the small censuses.
"""

from .refinement import aut_group, isomorphic
from .transitivity import (
    STAB_CATALOG,
    STABILIZER_BOUND,
    SClass,
    arc_transitive,
    catalog_names,
    s_class,
)
from .lattice import TranslationLattice, invariant_closure, lattice_of, translations_of
from .basic import (
    BasicVerdict,
    GDRecognition,
    QuotientStep,
    basic_quotient_chain,
    gd_recognize,
    is_basic,
    recognize,
)
from .census import (
    CensusEntry,
    CensusReport,
    NormalizerCheck,
    brute_force_automorphisms,
    census_2p2,
    lattice_line_count,
    normalizer_matches_aut,
    order_eight_pentavalent_check,
    order_p_subgroup_count,
    no_six_cycles_through_three_arc,
    six_cycles_through_three_arc,
)

__all__ = [
    'aut_group',
    'isomorphic',
    'STAB_CATALOG',
    'STABILIZER_BOUND',
    'SClass',
    'arc_transitive',
    'catalog_names',
    's_class',
    'TranslationLattice',
    'invariant_closure',
    'lattice_of',
    'translations_of',
    'BasicVerdict',
    'GDRecognition',
    'QuotientStep',
    'basic_quotient_chain',
    'gd_recognize',
    'is_basic',
    'recognize',
    'CensusEntry',
    'CensusReport',
    'NormalizerCheck',
    'brute_force_automorphisms',
    'census_2p2',
    'lattice_line_count',
    'normalizer_matches_aut',
    'order_eight_pentavalent_check',
    'order_p_subgroup_count',
    'no_six_cycles_through_three_arc',
    'six_cycles_through_three_arc',
]
