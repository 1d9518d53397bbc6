"""
Generalized dihedral groups GD_H = H x| Z_2 for abelian H.

Elements are pairs (v, flip) with product (v, e)(w, d) = (v + (-1)^e w, e xor d).
Elements are indexed by ``flip * |H| + radix(v)``, so the flip-0 block comes first
and each block follows the radix order of H.
"""

from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Sequence

import numpy as np

from .perm import Perm
from .permgroup import PermGroup
from ..algebra import AbelianSpec, AbVector, FpMatrix, solve_extension
from ..algebra.linalg import rank_mod_p
from ..exceptions import GroupError, NotGenerating, SpecMismatch, TooLarge
from .. import config


@dataclass(frozen=True)
class GDElement:
    """Element (h_part, flip) of a generalized dihedral group."""
    h_part: AbVector
    flip: int

    @property
    def spec(self) -> AbelianSpec:
        return self.h_part.spec

    def __mul__(self, other: "GDElement") -> "GDElement":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"GD({self.h_part.components}, {self.flip})"


@dataclass(frozen=True)
class GroupSpec:
    """GD_H, determined by the moduli of H."""
    h_spec: AbelianSpec

    @classmethod
    def over(cls, *moduli: int) -> "GroupSpec":
        return cls(AbelianSpec(tuple(moduli)))

    @property
    def order(self) -> int:
        return 2 * self.h_spec.order

    def identity(self) -> GDElement:
        return GDElement(self.h_spec.zero(), 0)

    def element(self, components: Sequence[int], flip: int = 0) -> GDElement:
        return GDElement(self.h_spec.vector(components), flip % 2)

    def index(self, x: GDElement) -> int:
        return x.flip * self.h_spec.order + self.h_spec.radix(x.h_part)

    def from_index(self, i: int) -> GDElement:
        flip, rest = divmod(i, self.h_spec.order)
        return GDElement(self.h_spec.from_radix(rest), flip)


ConnectionSet = tuple[GDElement, ...]


def compose(x: GDElement, y: GDElement) -> GDElement:
    """Group product x*y."""
    if x.spec != y.spec:
        raise SpecMismatch(f"{x.spec.moduli} vs {y.spec.moduli}")
    w = -y.h_part if x.flip else y.h_part
    return GDElement(x.h_part + w, x.flip ^ y.flip)


def inverse(x: GDElement) -> GDElement:
    if x.flip:
        return x
    return GDElement(-x.h_part, 0)


def _check_size(group: GroupSpec, limit: int | None = None) -> None:
    limit = config.GROUP_MAX_ELEMENTS if limit is None else limit
    if group.order > limit:
        raise TooLarge(f"|GD_H| = {group.order} exceeds {limit}")


def elements(group: GroupSpec) -> list[GDElement]:
    """All elements in index order."""
    _check_size(group)
    return [group.from_index(i) for i in range(group.order)]


def element_table(group: GroupSpec) -> tuple[np.ndarray, np.ndarray]:
    """Component table (order, rank) and flip column for every index."""
    _check_size(group)
    table = group.h_spec.component_table()
    both = np.concatenate([table, table])
    flips = np.repeat(np.array([0, 1], dtype=np.int64), group.h_spec.order)
    return both, flips


def right_multiplication_images(group: GroupSpec, x: GDElement) -> np.ndarray:
    """Index array of g -> g*x over all g."""
    table, flips = element_table(group)
    moduli = np.array(group.h_spec.moduli, dtype=np.int64)
    signs = np.where(flips == 1, -1, 1)[:, None]
    h = (table + signs * np.array(x.h_part.components, dtype=np.int64)) % moduli
    f = flips ^ x.flip
    return f * group.h_spec.order + group.h_spec.radix_array(h)


def right_regular_generators(group: GroupSpec) -> list[Perm]:
    """R(x) for the standard generators (e_i, 0) and (0, 1)."""
    gens = [group.h_spec.basis(i) for i in range(group.h_spec.rank)]
    elems = [GDElement(v, 0) for v in gens] + [GDElement(group.h_spec.zero(), 1)]
    return [Perm(right_multiplication_images(group, x), check=False) for x in elems]


def right_regular(group: GroupSpec) -> PermGroup:
    """Right regular representation R(G) on the indexed elements."""
    _check_size(group)
    return PermGroup(group.order, right_regular_generators(group))


# =============================================================================
# AUTOMORPHISMS FIXING A CONNECTION SET
# =============================================================================

@dataclass(frozen=True)
class AffineAut:
    """Automorphism (v,0) -> (Mv, 0), (v,1) -> (Mv + t, 1) of GD_H."""
    matrix: FpMatrix | int
    shift: AbVector

    def apply_h(self, v: AbVector) -> AbVector:
        if isinstance(self.matrix, int):
            return v.scale(self.matrix)
        return v.spec.vector(self.matrix.apply(v.components))

    def __call__(self, x: GDElement) -> GDElement:
        image = self.apply_h(x.h_part)
        if x.flip:
            image = image + self.shift
        return GDElement(image, x.flip)

    def index_images(self, group: GroupSpec) -> np.ndarray:
        """Vectorized action on element indices."""
        table, flips = element_table(group)
        moduli = np.array(group.h_spec.moduli, dtype=np.int64)
        if isinstance(self.matrix, int):
            h = (table * self.matrix) % moduli
        else:
            h = (table @ self.matrix.to_array().T) % moduli
        h = (h + flips[:, None] * np.array(self.shift.components, dtype=np.int64)) % moduli
        return flips * group.h_spec.order + group.h_spec.radix_array(h)


@dataclass(frozen=True)
class SetStabilizer:
    """Aut(G, S) as the affine automorphisms permuting S, with the induced S-permutations."""
    automorphisms: tuple[AffineAut, ...]
    permutations: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.automorphisms)

    def acts_transitively_on_s(self) -> bool:
        reached = {pi[0] for pi in self.permutations}
        return len(reached) == len(self.permutations[0]) if self.permutations else False


def _is_cyclic_prime_power(spec: AbelianSpec) -> bool:
    return spec.rank == 1


def _spans(group: GroupSpec, connection: Sequence[GDElement]) -> bool:
    spec = group.h_spec
    diffs = [(s.h_part - connection[0].h_part).components for s in connection[1:]]
    if _is_cyclic_prime_power(spec):
        m = spec.moduli[0]
        g = m
        for d in diffs:
            g = gcd(g, d[0])
        return g == 1
    return rank_mod_p(diffs, spec.moduli[0]) == spec.rank


def aut_fixing_s(group: GroupSpec, connection: Sequence[GDElement]) -> SetStabilizer:
    """
    Compute Aut(G, S) for a connection set of flip-1 elements.

    For each permutation pi of S, the linear part is forced on the differences
    s_i - s_0 and the shift is t = s_pi(0) - M s_0.

    Raises:
        NotGenerating: if the differences of S do not generate H
    """
    spec = group.h_spec
    if any(s.flip != 1 for s in connection):
        raise GroupError("connection set must consist of flip-1 elements")
    if not (spec.is_elementary or _is_cyclic_prime_power(spec)):
        raise GroupError(f"unsupported H with moduli {spec.moduli}")
    if not _spans(group, connection):
        raise NotGenerating("connection set does not generate GD_H")

    s = [x.h_part for x in connection]
    k = len(s)
    index_of = {v.components: i for i, v in enumerate(s)}
    sources = [(s[i] - s[0]).components for i in range(1, k)]
    found: list[AffineAut] = []
    perms: list[tuple[int, ...]] = []
    for pi in permutations(range(k)):
        targets = [(s[pi[i]] - s[pi[0]]).components for i in range(1, k)]
        if _is_cyclic_prime_power(spec):
            matrix = _solve_unit_multiplier(spec.moduli[0], sources, targets)
        else:
            matrix = solve_extension(spec.moduli[0], sources, targets)
        if matrix is None:
            continue
        shift = s[pi[0]] - _apply(matrix, s[0])
        aut = AffineAut(matrix, shift)
        images = [index_of.get((_apply(matrix, v) + shift).components) for v in s]
        if images != list(pi):
            continue
        found.append(aut)
        perms.append(tuple(pi))
    return SetStabilizer(tuple(found), tuple(perms))


def _apply(matrix: FpMatrix | int, v: AbVector) -> AbVector:
    if isinstance(matrix, int):
        return v.scale(matrix)
    return v.spec.vector(matrix.apply(v.components))


def _solve_unit_multiplier(m: int, sources, targets) -> int | None:
    """Unit k with k*source_i = target_i in Z_m, if one exists."""
    candidates = None
    for (a,), (b,) in zip(sources, targets):
        options = {k for k in (candidates if candidates is not None else range(1, m))
                   if (k * a - b) % m == 0}
        candidates = options
        if not candidates:
            return None
    units = sorted(k for k in candidates if gcd(k, m) == 1)
    return units[0] if units else None


def vertex_permutation(group: GroupSpec, aut: AffineAut) -> Perm:
    """The automorphism as a permutation of element indices."""
    return Perm(aut.index_images(group), check=False)


def is_group_automorphism(group: GroupSpec, aut: AffineAut, generators: Sequence[GDElement]) -> bool:
    """Check the homomorphism law on all generator pairs."""
    return all(
        aut(compose(x, y)) == compose(aut(x), aut(y))
        for x in generators for y in generators
    )


def standard_generators(group: GroupSpec) -> list[GDElement]:
    spec = group.h_spec
    return [GDElement(spec.basis(i), 0) for i in range(spec.rank)] + [GDElement(spec.zero(), 1)]
