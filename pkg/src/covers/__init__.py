"""
Z_p^n-covers of the dipole Dip_5 and their classification.
"""

from .dipole import (
    DipAut,
    ALPHA,
    BETA,
    GAMMA,
    DELTA,
    EPSILON,
    IDENTITY,
    all_dip_auts,
    named_dip_auts,
)
from .voltage import (
    Dip5Voltage,
    DerivedCover,
    LiftingGroup,
    derived,
    fundamental_voltages,
    induced_pairs,
    symbolic_table,
    lifts,
    lift_to_cover,
    lifting_group,
    fibre_preserving_group,
    cover_is_arc_transitive,
    covers_isomorphic,
    witness_for,
    family_voltage,
    gd_relabeling,
)
from .classify import CoverClass, classify

__all__ = [
    'DipAut',
    'ALPHA',
    'BETA',
    'GAMMA',
    'DELTA',
    'EPSILON',
    'IDENTITY',
    'all_dip_auts',
    'named_dip_auts',
    'Dip5Voltage',
    'DerivedCover',
    'LiftingGroup',
    'derived',
    'fundamental_voltages',
    'induced_pairs',
    'symbolic_table',
    'lifts',
    'lift_to_cover',
    'lifting_group',
    'fibre_preserving_group',
    'cover_is_arc_transitive',
    'covers_isomorphic',
    'witness_for',
    'family_voltage',
    'gd_relabeling',
    'CoverClass',
    'classify',
]
