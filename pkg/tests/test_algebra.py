"""Tests for modular arithmetic, abelian groups and F_p linear algebra."""

from itertools import product

import numpy as np
import pytest

from src.algebra import (
    AbVector,
    AbelianSpec,
    FpMatrix,
    determinant_mod_p,
    element_of_order,
    elements_of_order,
    has_order,
    independent_positions,
    invert_mod_p,
    is_prime,
    multiplicative_order,
    prime_factors,
    rank_mod_p,
    require_prime,
    solve_extension,
    sqrt5,
    unit_inverse,
)
from src.exceptions import AlgebraError, NotAUnit, SourcesDoNotSpan, SpecMismatch, UnsupportedParameter


class TestModular:
    """Tests for arithmetic over Z_m."""

    def test_is_prime(self):
        """Small primes and composites."""
        assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert not is_prime(91)

    def test_prime_factors(self):
        """Distinct factors in ascending order."""
        assert prime_factors(240) == [2, 3, 5]
        assert prime_factors(23040) == [2, 3, 5]
        assert prime_factors(121) == [11]

    def test_require_prime_rejects_composite(self):
        """Composite p is an unsupported parameter."""
        with pytest.raises(UnsupportedParameter):
            require_prime(15)

    def test_unit_inverse(self):
        """Inverse of a unit and refusal for non-units."""
        assert unit_inverse(3, 11) == 4
        with pytest.raises(NotAUnit):
            unit_inverse(2, 4)

    def test_multiplicative_order(self):
        """2 generates (Z_11)^*."""
        assert multiplicative_order(2, 11) == 10
        assert multiplicative_order(10, 41) == 5

    def test_order_five_units_mod_11(self):
        """Exactly four units of order 5 modulo 11."""
        assert elements_of_order(5, 11) == [3, 4, 5, 9]
        assert element_of_order(5, 11) == 3

    def test_no_order_five_unit_mod_7(self):
        """5 does not divide 6."""
        assert element_of_order(5, 7) is None

    def test_has_order_excludes_identity(self):
        """1 has order 1, not 5."""
        assert not has_order(1, 5, 11)
        assert has_order(10, 5, 41)

    def test_order_five_mod_p_squared(self):
        """Order-5 units modulo 121 exist since 5 divides 110."""
        ell = element_of_order(5, 121)
        assert ell is not None
        assert pow(ell, 5, 121) == 1

    def test_sqrt5(self):
        """Smaller square root of 5, None for non-residues."""
        assert sqrt5(11) == 4
        assert sqrt5(19) == 9
        assert sqrt5(7) is None


class TestAbelianSpec:
    """Tests for Z_{m_1} x ... x Z_{m_k}."""

    def test_radix_round_trip(self):
        """Radix order is lexicographic with the first component most significant."""
        spec = AbelianSpec((5, 5))
        assert spec.radix(spec.vector((2, 3))) == 13
        assert spec.from_radix(13).components == (2, 3)

    def test_vector_reduces_components(self):
        """Components are reduced by their moduli."""
        assert AbelianSpec((5, 5)).vector((-1, 7)).components == (4, 2)

    def test_direct_construction_reduces(self):
        """AbVector built directly is reduced and equals its reduced form."""
        spec = AbelianSpec((2, 4))
        v = AbVector(spec, (3, -1))
        assert v.components == (1, 3)
        assert v == spec.vector((1, 3))
        assert spec.radix(v) == 7
        assert hash(v) == hash(AbVector(spec, (1, 7)))

    def test_direct_construction_checks_rank(self):
        """Component count must match the rank."""
        with pytest.raises(AlgebraError):
            AbVector(AbelianSpec((5, 5)), (1,))

    def test_invalid_moduli(self):
        """Empty specs and moduli below 2 are rejected."""
        with pytest.raises(AlgebraError):
            AbelianSpec(())
        with pytest.raises(AlgebraError):
            AbelianSpec((1,))

    def test_arithmetic(self):
        """Addition, negation and scaling."""
        spec = AbelianSpec.elementary(7, 3)
        a = spec.vector((1, 2, 3))
        b = spec.vector((6, 6, 6))
        assert (a + b).components == (0, 1, 2)
        assert (-a).components == (6, 5, 4)
        assert a.scale(3).components == (3, 6, 2)
        assert (a - a).is_zero()

    def test_spec_mismatch(self):
        """Vectors from different groups do not add."""
        with pytest.raises(SpecMismatch):
            AbelianSpec((5,)).vector((1,)) + AbelianSpec((7,)).vector((1,))

    def test_component_table_matches_radix(self):
        """The vectorized table lists elements in radix order."""
        spec = AbelianSpec((2, 3))
        table = spec.component_table()
        assert table.tolist() == [list(v.components) for v in spec.vectors()]
        assert np.array_equal(spec.radix_array(table), np.arange(6))

    def test_elementary_flag(self):
        """Z_5^2 is elementary, Z_2 x Z_4 is not."""
        assert AbelianSpec.elementary(5, 2).is_elementary
        assert not AbelianSpec((2, 4)).is_elementary
        assert AbelianSpec.cyclic(121).order == 121


class TestLinearAlgebra:
    """Tests for small dense matrices over F_p."""

    def test_rank(self):
        """Rank of dependent and independent lists."""
        assert rank_mod_p([(1, 2), (2, 4)], 5) == 1
        assert rank_mod_p([(1, 1), (1, 2)], 5) == 2
        assert rank_mod_p([], 5) == 0

    def test_determinant(self):
        """det [[1,2],[3,4]] = -2 = 3 mod 5."""
        assert determinant_mod_p([[1, 2], [3, 4]], 5) == 3

    def test_inverse(self):
        """Gauss-Jordan inverse and its product with the original."""
        inverse = invert_mod_p([[1, 2], [3, 4]], 5)
        assert inverse == ((3, 1), (4, 2))
        m = FpMatrix(5, ((1, 2), (3, 4)))
        assert (m @ m.inverse()) == FpMatrix.identity(5, 2)

    def test_singular_inverse(self):
        """Singular matrices have no inverse."""
        with pytest.raises(AlgebraError):
            invert_mod_p([[1, 2], [2, 4]], 5)

    def test_from_columns_and_apply(self):
        """Columns are the images of the standard basis."""
        m = FpMatrix.from_columns(7, [(1, 2), (3, 4)])
        assert m.apply((1, 0)) == (1, 2)
        assert m.apply((0, 1)) == (3, 4)
        assert m.columns() == [(1, 2), (3, 4)]

    def test_independent_positions(self):
        """First maximal independent subsequence."""
        assert independent_positions([(1, 1), (2, 2), (0, 1)], 5) == [0, 2]

    def test_solve_extension_swap(self):
        """The coordinate swap extends e1 -> e2, e2 -> e1, e1+e2 -> e1+e2."""
        m = solve_extension(5, [(1, 0), (0, 1), (1, 1)], [(0, 1), (1, 0), (1, 1)])
        assert m is not None
        assert m.rows == ((0, 1), (1, 0))

    def test_solve_extension_inconsistent(self):
        """A dependent source whose target breaks linearity has no extension."""
        assert solve_extension(5, [(1, 0), (0, 1), (1, 1)], [(0, 1), (1, 0), (2, 2)]) is None

    def test_solve_extension_singular(self):
        """Consistent but singular maps are refused."""
        assert solve_extension(5, [(1, 0), (0, 1)], [(1, 1), (1, 1)]) is None

    def test_solve_extension_needs_spanning_sources(self):
        """Sources must span the space."""
        with pytest.raises(SourcesDoNotSpan):
            solve_extension(5, [(1, 1), (2, 2)], [(1, 0), (0, 1)])

    def test_solve_extension_matches_exhaustive_search(self):
        """Existence agrees with trying every 2x2 matrix over F_3."""
        p = 3
        sources = [(1, 0), (0, 1), (1, 1)]
        vectors = list(product(range(p), repeat=2))
        matrices = [FpMatrix(p, ((a, b), (c, d))) for a, b, c, d in product(range(p), repeat=4)]
        invertible = [m for m in matrices if m.is_invertible()]
        for targets in product(vectors, repeat=3):
            exists = any(all(m.apply(s) == t for s, t in zip(sources, targets)) for m in invertible)
            assert (solve_extension(p, sources, targets) is not None) == exists
