"""
Permutation groups and generalized dihedral groups.
"""

from .perm import Perm
from .permgroup import PermGroup, trivial_group, join, same_subgroup
from .normal import (
    normal_closure,
    normal_subgroups,
    conjugacy_class_representatives,
    is_normal,
    tuple_orbit_transitive,
)
from .gdgroup import (
    GDElement,
    GroupSpec,
    ConnectionSet,
    AffineAut,
    SetStabilizer,
    compose,
    inverse,
    elements,
    right_regular,
    right_regular_generators,
    aut_fixing_s,
    vertex_permutation,
    is_group_automorphism,
    standard_generators,
)

__all__ = [
    'Perm',
    'PermGroup',
    'trivial_group',
    'join',
    'same_subgroup',
    'normal_closure',
    'normal_subgroups',
    'conjugacy_class_representatives',
    'is_normal',
    'tuple_orbit_transitive',
    'GDElement',
    'GroupSpec',
    'ConnectionSet',
    'AffineAut',
    'SetStabilizer',
    'compose',
    'inverse',
    'elements',
    'right_regular',
    'right_regular_generators',
    'aut_fixing_s',
    'vertex_permutation',
    'is_group_automorphism',
    'standard_generators',
]
