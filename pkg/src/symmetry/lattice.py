"""
Elementary abelian translation subgroups viewed as F_p-vector spaces.
"""

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from ..algebra import FpMatrix, prime_factors, rank_mod_p
from ..exceptions import NotAbelian, Unsupported
from ..graphs.constructions import NamedGraph
from ..groups import Perm, PermGroup, right_regular_generators

Vector = tuple[int, ...]


@dataclass
class TranslationLattice:
    """Coordinates on T = Z_p^n through its regular action on the orbit of ``origin``."""
    group: PermGroup
    p: int
    basis: list[Perm]
    origin: int
    coords: dict[int, Vector]

    @property
    def n(self) -> int:
        return len(self.basis)

    def vector_of(self, g: Perm) -> Vector:
        return self.coords[g(self.origin)]

    def element(self, vector: Sequence[int]) -> Perm:
        g = self.group.identity()
        for t, k in zip(self.basis, vector):
            for _ in range(k % self.p):
                g = g * t
        return g

    def action_matrix(self, g: Perm) -> FpMatrix:
        """Matrix of t -> g^-1 t g in the chosen basis."""
        return FpMatrix.from_columns(self.p, [self.vector_of(t.conjugate(g)) for t in self.basis])

    def lines(self) -> list[Vector]:
        """One normalized vector per order-p subgroup (first nonzero coordinate 1)."""
        found = []
        for index in range(1, self.p ** self.n):
            v = []
            x = index
            for _ in range(self.n):
                v.append(x % self.p)
                x //= self.p
            v = tuple(reversed(v))
            if next(c for c in v if c) == 1:
                found.append(v)
        return found

    def subgroup(self, vectors: Sequence[Sequence[int]]) -> PermGroup:
        return PermGroup(self.group.degree, [self.element(v) for v in vectors])


def lattice_of(group: PermGroup, origin: int = 0) -> TranslationLattice:
    """
    Raises:
        NotAbelian: if the group is not abelian
        Unsupported: if it is not an elementary abelian p-group
    """
    if not group.is_abelian():
        raise NotAbelian("translation group is not abelian")
    order = group.order()
    primes = prime_factors(order)
    if len(primes) != 1:
        raise Unsupported(f"group of order {order} is not a p-group")
    p = primes[0]
    basis: list[Perm] = []
    span = PermGroup(group.degree, [])
    for g in group.generators:
        if g.order() != p:
            raise Unsupported(f"generator of order {g.order()} in a group of exponent {p}")
        if not span.contains(g):
            basis.append(g)
            span = PermGroup(group.degree, basis)
    coords = {origin: (0,) * len(basis)}
    queue = deque([origin])
    while queue:
        x = queue.popleft()
        for i, t in enumerate(basis):
            y = t(x)
            if y not in coords:
                c = list(coords[x])
                c[i] = (c[i] + 1) % p
                coords[y] = tuple(c)
                queue.append(y)
    return TranslationLattice(group, p, basis, origin, coords)


def invariant_closure(vector: Sequence[int], matrices: Sequence[FpMatrix], p: int) -> list[Vector]:
    """Basis of the smallest subspace containing ``vector`` and stable under ``matrices``."""
    span = [tuple(vector)]
    queue = deque(span)
    while queue:
        x = queue.popleft()
        for m in matrices:
            y = m.apply(x)
            if rank_mod_p(span + [y], p) > len(span):
                span.append(y)
                queue.append(y)
    return span


def translations_of(ng: NamedGraph) -> Optional[PermGroup]:
    """R(H) for a Cayley graph on GD_H with H elementary abelian; None otherwise."""
    if ng.group is None or not ng.group.h_spec.is_elementary:
        return None
    gens = right_regular_generators(ng.group)[:ng.group.h_spec.rank]
    return PermGroup(ng.group.order, gens)
