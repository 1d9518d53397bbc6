"""
Modular arithmetic, finite abelian groups and prime-field linear algebra.
"""

from .modular import (
    is_prime,
    prime_factors,
    require_prime,
    unit_inverse,
    multiplicative_order,
    has_order,
    element_of_order,
    elements_of_order,
    sqrt5,
)
from .abelian import AbelianSpec, AbVector
from .linalg import (
    FpMatrix,
    rank_mod_p,
    determinant_mod_p,
    invert_mod_p,
    independent_positions,
    solve_extension,
)

__all__ = [
    'is_prime',
    'prime_factors',
    'require_prime',
    'unit_inverse',
    'multiplicative_order',
    'has_order',
    'element_of_order',
    'elements_of_order',
    'sqrt5',
    'AbelianSpec',
    'AbVector',
    'FpMatrix',
    'rank_mod_p',
    'determinant_mod_p',
    'invert_mod_p',
    'independent_positions',
    'solve_extension',
]
