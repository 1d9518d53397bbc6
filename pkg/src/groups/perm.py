"""
Permutations on {0..degree-1}.

Products act on the right: ``(p * q)(x) == q(p(x))``, i.e. apply p first.
Images are held in read-only int64 numpy arrays so that composition is a single
fancy-indexing step even at a few thousand points.
"""

from typing import Iterable, Sequence

import numpy as np

from ..exceptions import DegreeMismatch, GroupError


class Perm:
    """Immutable permutation."""

    __slots__ = ('images', '_key')

    def __init__(self, images: Sequence[int] | np.ndarray, *, check: bool = True):
        arr = np.array(images, dtype=np.int64)
        if check:
            n = arr.shape[0]
            if arr.ndim != 1 or not np.array_equal(np.sort(arr), np.arange(n)):
                raise GroupError("images do not form a bijection")
        arr.setflags(write=False)
        self.images = arr
        self._key = None

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(np.arange(degree, dtype=np.int64), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build from disjoint cycles, e.g. ``[(0, 1, 2), (3, 4)]``."""
        images = np.arange(degree, dtype=np.int64)
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return int(self.images.shape[0])

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.images.tobytes()
        return self._key

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise DegreeMismatch(f"{self.degree} vs {other.degree}")
        return Perm(other.images[self.images], check=False)

    def inverse(self) -> "Perm":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree, dtype=np.int64)
        return Perm(inv, check=False)

    def conjugate(self, by: "Perm") -> "Perm":
        """by^-1 * self * by."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def first_moved_point(self) -> int | None:
        moved = np.nonzero(self.images != np.arange(self.degree))[0]
        return int(moved[0]) if moved.size else None

    def fixes(self, point: int) -> bool:
        return int(self.images[point]) == point

    def has_fixed_point(self) -> bool:
        return bool(np.any(self.images == np.arange(self.degree)))

    def order(self) -> int:
        from math import lcm
        result = 1
        for cycle in self.cycles():
            result = lcm(result, len(cycle))
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            nxt = int(self.images[start])
            while nxt != start:
                seen[nxt] = True
                cycle.append(nxt)
                nxt = int(self.images[nxt])
            out.append(tuple(cycle))
        return out

    def to_list(self) -> list[int]:
        return [int(x) for x in self.images]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "Perm()"
        return "Perm(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) + ")"
