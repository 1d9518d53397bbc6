"""
Automorphisms of the dipole Dip_5.

The dipole has vertices u, v and arcs a_0..a_4 from u to v (zero-based). An
automorphism is a pair (pi, swap): arc a_i goes to a_pi(i), reversed when swap
is set. Products act on the right, ``(s * t)`` applies s first.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

ARCS = 5


@dataclass(frozen=True, order=True)
class DipAut:
    """Automorphism of Dip_5; ordering is lexicographic on (swap, pi)."""
    swap: int
    pi: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.pi) != list(range(ARCS)):
            raise ValueError(f"{self.pi} is not a permutation of 0..{ARCS - 1}")
        object.__setattr__(self, 'pi', tuple(int(x) for x in self.pi))
        object.__setattr__(self, 'swap', int(self.swap) & 1)

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], swap: int = 0) -> "DipAut":
        """Build from 1-based arc cycles, e.g. ``[(1, 2, 4, 3)]``."""
        pi = list(range(ARCS))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                pi[a - 1] = b - 1
        return cls(swap, tuple(pi))

    def compose(self, other: "DipAut") -> "DipAut":
        """self then other."""
        return DipAut(self.swap ^ other.swap, tuple(other.pi[self.pi[i]] for i in range(ARCS)))

    def __mul__(self, other: "DipAut") -> "DipAut":
        return self.compose(other)

    def inverse(self) -> "DipAut":
        inv = [0] * ARCS
        for i, j in enumerate(self.pi):
            inv[j] = i
        return DipAut(self.swap, tuple(inv))

    def is_identity(self) -> bool:
        return self.swap == 0 and self.pi == tuple(range(ARCS))

    def apply_arc(self, arc: tuple[int, int]) -> tuple[int, int]:
        """Image of the directed arc (index, direction); direction 0 runs u -> v."""
        index, direction = arc
        return self.pi[index], direction ^ self.swap

    def cycle_notation(self) -> str:
        """1-based cycles of pi followed by the swap bit."""
        seen = set()
        parts = []
        for start in range(ARCS):
            if start in seen or self.pi[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.pi[start]
            while x != start:
                seen.add(x)
                cycle.append(x)
                x = self.pi[x]
            parts.append("(" + " ".join(str(c + 1) for c in cycle) + ")")
        body = "".join(parts) or "()"
        return body + (" swap" if self.swap else "")


IDENTITY = DipAut(0, tuple(range(ARCS)))
ALPHA = DipAut.from_cycles([(1, 2, 3, 4, 5)])
BETA = DipAut.from_cycles([(1, 2, 4, 3)])
GAMMA = DipAut(1, tuple(range(ARCS)))
DELTA = DipAut.from_cycles([(1, 2, 3)])
EPSILON = DipAut.from_cycles([(1, 2, 5, 4)])


def named_dip_auts() -> dict[str, DipAut]:
    """The automorphisms whose fundamental-cycle images are tabulated."""
    return {
        "alpha": ALPHA,
        "beta": BETA,
        "beta^2": BETA * BETA,
        "gamma": GAMMA,
        "delta": DELTA,
        "epsilon": EPSILON,
    }


@lru_cache(maxsize=1)
def all_dip_auts() -> tuple[DipAut, ...]:
    """All 240 automorphisms in lexicographic (swap, pi) order."""
    return tuple(DipAut(swap, pi) for swap in (0, 1) for pi in permutations(range(ARCS)))


def arc_orbit(elements: Sequence[DipAut], start: tuple[int, int] = (0, 0)) -> set[tuple[int, int]]:
    """Orbit of a directed arc under the group generated by ``elements``."""
    seen = {start}
    frontier = [start]
    while frontier:
        arc = frontier.pop()
        for s in elements:
            image = s.apply_arc(arc)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return seen
