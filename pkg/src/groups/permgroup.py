"""
Permutation groups with a base and strong generating set.

The stabilizer chain is built lazily by Schreier-Sims: a seeded random phase
sifts product-replacement elements, then every Schreier generator is sifted
deterministically, so the resulting order never depends on the random phase.
Groups whose base and strong generators are already certified (the refinement
search produces such sets) skip both phases.
"""

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from random import Random
from typing import Iterator, Optional, Sequence

from .perm import Perm
from .. import config
from ..exceptions import DegreeMismatch, PointOutOfRange
from ..log import get_logger

logger = get_logger(__name__)


@dataclass
class _Level:
    """One stabilizer-chain level: base point, Schreier tree, cached coset reps."""
    point: int
    generators: list[Perm] = field(default_factory=list)
    tree: dict[int, tuple[int, int]] = field(default_factory=dict)
    reps: dict[int, Perm] = field(default_factory=dict)
    rep_inverses: dict[int, Perm] = field(default_factory=dict)

    def rebuild(self, degree: int) -> None:
        """Breadth-first Schreier tree over the level generators."""
        self.tree = {self.point: (-1, -1)}
        self.reps = {self.point: Perm.identity(degree)}
        self.rep_inverses = {self.point: self.reps[self.point]}
        queue = deque([self.point])
        while queue:
            x = queue.popleft()
            for index, g in enumerate(self.generators):
                y = g(x)
                if y not in self.tree:
                    self.tree[y] = (x, index)
                    queue.append(y)

    def rep(self, point: int) -> Perm:
        """Coset representative mapping the base point to ``point``."""
        cached = self.reps.get(point)
        if cached is not None:
            return cached
        path = []
        x = point
        while x not in self.reps:
            parent, index = self.tree[x]
            path.append(index)
            x = parent
        u = self.reps[x]
        for index in reversed(path):
            u = u * self.generators[index]
        self.reps[point] = u
        return u

    def rep_inverse(self, point: int) -> Perm:
        cached = self.rep_inverses.get(point)
        if cached is None:
            cached = self.rep(point).inverse()
            self.rep_inverses[point] = cached
        return cached


class PermGroup:
    """
    Group generated by permutations of a common degree.

    Args:
        degree: number of points
        generators: generating permutations (identities are dropped)
        seed: seed for the random phase of chain construction
    """

    def __init__(self, degree: int, generators: Sequence[Perm] = (), *, seed: Optional[int] = None):
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in group of degree {degree}")
        unique: dict[bytes, Perm] = {}
        for g in generators:
            if not g.is_identity():
                unique.setdefault(g.key(), g)
        self._degree = degree
        self._generators = tuple(unique.values())
        self._seed = config.SCHREIER_SEED if seed is None else seed
        self._levels: Optional[list[_Level]] = None
        self._strong: list[Perm] = []

    @classmethod
    def from_strong_generators(
        cls,
        degree: int,
        base: Sequence[int],
        strong_generators: Sequence[Perm],
    ) -> "PermGroup":
        """Wrap a base and strong generating set that is already known to be complete."""
        group = cls(degree, strong_generators)
        group._strong = list(group._generators)
        group._levels = []
        for i, b in enumerate(base):
            level = _Level(point=b, generators=[
                s for s in group._strong if all(s.fixes(c) for c in base[:i])
            ])
            level.rebuild(degree)
            group._levels.append(level)
        return group

    # =========================================================================
    # BASIC PROPERTIES
    # =========================================================================

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Perm, ...]:
        return self._generators

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.point for level in self._chain())

    @property
    def strong_generators(self) -> tuple[Perm, ...]:
        self._chain()
        return tuple(self._strong)

    def identity(self) -> Perm:
        return Perm.identity(self._degree)

    def is_trivial(self) -> bool:
        return not self._generators

    def order(self) -> int:
        result = 1
        for level in self._chain():
            result *= len(level.tree)
        return result

    def basic_orbit_sizes(self) -> list[int]:
        return [len(level.tree) for level in self._chain()]

    # =========================================================================
    # ORBITS
    # =========================================================================

    def orbit(self, point: int) -> list[int]:
        """Sorted orbit of a point under the generators."""
        if not 0 <= point < self._degree:
            raise PointOutOfRange(f"point {point} not in 0..{self._degree - 1}")
        seen = {point}
        queue = deque([point])
        while queue:
            x = queue.popleft()
            for g in self._generators:
                y = g(x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        """All orbits, each sorted, ordered by smallest point."""
        parent = list(range(self._degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self._generators:
            for x, y in enumerate(g.to_list()):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        cells: dict[int, list[int]] = {}
        for x in range(self._degree):
            cells.setdefault(find(x), []).append(x)
        return [cells[r] for r in sorted(cells)]

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_semiregular(self) -> bool:
        """Every point stabilizer is trivial, i.e. every orbit has length |G|."""
        order = self.order()
        return all(len(o) == order for o in self.orbits())

    def is_abelian(self) -> bool:
        gens = self._generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    # =========================================================================
    # MEMBERSHIP
    # =========================================================================

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Strip g through the chain from level ``start``; returns residue and stop level."""
        levels = self._chain()
        h = g
        for i in range(start, len(levels)):
            level = levels[i]
            beta = h(level.point)
            if beta not in level.tree:
                return h, i
            h = h * level.rep_inverse(beta)
        return h, len(levels)

    def contains(self, g: Perm) -> bool:
        if g.degree != self._degree:
            raise DegreeMismatch(f"permutation of degree {g.degree} vs group degree {self._degree}")
        residue, _ = self.sift(g)
        return residue.is_identity()

    def __contains__(self, g: Perm) -> bool:
        return self.contains(g)

    def contains_group(self, other: "PermGroup") -> bool:
        return all(self.contains(g) for g in other.generators)

    def base_image(self, g: Perm) -> tuple[int, ...]:
        """Images of the base points; determines a group element uniquely."""
        return tuple(g(level.point) for level in self._chain())

    def elements(self) -> Iterator[Perm]:
        """Every element once, as products of coset representatives."""
        levels = self._chain()
        if not levels:
            yield self.identity()
            return
        points = [sorted(level.tree) for level in levels]
        for choice in product(*points):
            g = self.identity()
            for level, beta in zip(reversed(levels), reversed(choice)):
                g = g * level.rep(beta)
            yield g

    def random_element(self, rng: Random) -> Perm:
        """Uniform random element from the chain."""
        g = self.identity()
        for level in reversed(self._chain()):
            g = g * level.rep(rng.choice(sorted(level.tree)))
        return g

    def subgroup_fixing_base_prefix(self, k: int) -> "PermGroup":
        """Pointwise stabilizer of the first k base points."""
        levels = self._chain()
        base = [level.point for level in levels]
        gens = [s for s in self._strong if all(s.fixes(b) for b in base[:k])]
        return PermGroup.from_strong_generators(self._degree, base[k:], gens)

    # =========================================================================
    # SCHREIER-SIMS
    # =========================================================================

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = []
            self._strong = []
            self._build()
        return self._levels

    def _add_strong(self, h: Perm, stop: int) -> int:
        """Add a sift residue as strong generator; returns deepest affected level."""
        levels = self._levels
        if stop == len(levels):
            moved = h.first_moved_point()
            levels.append(_Level(point=moved))
        self._strong.append(h)
        for i in range(stop + 1):
            levels[i].generators.append(h)
            levels[i].rebuild(self._degree)
        return stop

    def _build(self) -> None:
        for g in self._generators:
            residue, stop = self.sift(g)
            if not residue.is_identity():
                self._add_strong(residue, stop)
        if not self._generators:
            return
        self._random_phase()
        self._verify()
        logger.debug(f"[+] chain built: degree {self._degree}, orbit sizes {self.basic_orbit_sizes()}")

    def _random_phase(self, quiet_rounds: int = 12) -> None:
        rng = Random(self._seed)
        state = list(self._generators) * max(1, 10 // len(self._generators) + 1)
        accumulator = self.identity()
        for _ in range(50):
            self._product_replacement_step(rng, state)
        quiet = 0
        while quiet < quiet_rounds:
            accumulator = accumulator * self._product_replacement_step(rng, state)
            residue, stop = self.sift(accumulator)
            if residue.is_identity():
                quiet += 1
            else:
                self._add_strong(residue, stop)
                quiet = 0

    @staticmethod
    def _product_replacement_step(rng: Random, state: list[Perm]) -> Perm:
        i, j = rng.sample(range(len(state)), 2) if len(state) > 1 else (0, 0)
        state[i] = state[i] * state[j] if rng.random() < 0.5 else state[i] * state[j].inverse()
        return state[i]

    def _verify(self) -> None:
        """Sift every Schreier generator, deepest level first."""
        level_index = len(self._levels) - 1
        while level_index >= 0:
            affected = self._verify_level(level_index)
            if affected is None:
                level_index -= 1
            else:
                level_index = min(affected, len(self._levels) - 1)

    def _verify_level(self, i: int) -> Optional[int]:
        level = self._levels[i]
        for beta in sorted(level.tree):
            u = level.rep(beta)
            for s in list(level.generators):
                image = s(beta)
                schreier = u * s * level.rep_inverse(image)
                residue, stop = self.sift(schreier, i + 1)
                if not residue.is_identity():
                    return self._add_strong(residue, stop)
        return None


# =============================================================================
# SUBGROUP OPERATIONS
# =============================================================================

def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, [])


def join(a: PermGroup, b: PermGroup) -> PermGroup:
    """Subgroup generated by both generator sets."""
    return PermGroup(a.degree, list(a.generators) + list(b.generators))


def same_subgroup(a: PermGroup, b: PermGroup) -> bool:
    return a.order() == b.order() and a.contains_group(b)
