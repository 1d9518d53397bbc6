"""
Finite abelian groups Z_{m_1} x ... x Z_{m_k} and their elements.

Vectors are ordered by their mixed-radix value with the first component most
significant, so radix order coincides with lexicographic order.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from ..exceptions import AlgebraError, SpecMismatch


@dataclass(frozen=True)
class AbelianSpec:
    """Moduli of an abelian group Z_{m_1} x ... x Z_{m_k}."""
    moduli: tuple[int, ...]

    def __post_init__(self):
        if len(self.moduli) < 1:
            raise AlgebraError("abelian group needs at least one factor")
        if any(m < 2 for m in self.moduli):
            raise AlgebraError(f"moduli must be >= 2, got {self.moduli}")
        object.__setattr__(self, 'moduli', tuple(int(m) for m in self.moduli))

    @classmethod
    def elementary(cls, p: int, n: int) -> "AbelianSpec":
        """Z_p^n."""
        return cls((p,) * n)

    @classmethod
    def cyclic(cls, m: int) -> "AbelianSpec":
        """Z_m."""
        return cls((m,))

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        result = 1
        for m in self.moduli:
            result *= m
        return result

    @property
    def is_elementary(self) -> bool:
        return len(set(self.moduli)) == 1

    def zero(self) -> "AbVector":
        return AbVector(self, (0,) * self.rank)

    def basis(self, i: int) -> "AbVector":
        """Standard generator e_{i+1} (zero-based index i)."""
        return AbVector(self, tuple(1 if j == i else 0 for j in range(self.rank)))

    def vector(self, components: Iterable[int]) -> "AbVector":
        """Build a vector, reducing each component by its modulus."""
        return AbVector(self, tuple(components))

    def radix(self, v: "AbVector") -> int:
        index = 0
        for c, m in zip(v.components, self.moduli):
            index = index * m + c
        return index

    def from_radix(self, index: int) -> "AbVector":
        comps = []
        for m in reversed(self.moduli):
            comps.append(index % m)
            index //= m
        return AbVector(self, tuple(reversed(comps)))

    def vectors(self) -> Iterator["AbVector"]:
        """All elements in radix order."""
        for i in range(self.order):
            yield self.from_radix(i)

    def component_table(self) -> np.ndarray:
        """(order, rank) integer array of all elements in radix order."""
        index = np.arange(self.order, dtype=np.int64)
        table = np.empty((self.order, self.rank), dtype=np.int64)
        for j in range(self.rank - 1, -1, -1):
            m = self.moduli[j]
            table[:, j] = index % m
            index = index // m
        return table

    def radix_array(self, table: np.ndarray) -> np.ndarray:
        """Vectorized radix over rows of a component table (already reduced)."""
        index = np.zeros(table.shape[0], dtype=np.int64)
        for j, m in enumerate(self.moduli):
            index = index * m + table[:, j]
        return index


@dataclass(frozen=True)
class AbVector:
    """Element of an abelian group, components reduced by the spec's moduli."""
    spec: AbelianSpec
    components: tuple[int, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != self.spec.rank:
            raise AlgebraError(f"expected {self.spec.rank} components, got {len(comps)}")
        object.__setattr__(self, 'components', tuple(int(c) % m for c, m in zip(comps, self.spec.moduli)))

    def _check(self, other: "AbVector") -> None:
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec.moduli} vs {other.spec.moduli}")

    def __add__(self, other: "AbVector") -> "AbVector":
        self._check(other)
        return AbVector(self.spec, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "AbVector") -> "AbVector":
        self._check(other)
        return AbVector(self.spec, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "AbVector":
        return AbVector(self.spec, tuple(-a for a in self.components))

    def scale(self, k: int) -> "AbVector":
        return AbVector(self.spec, tuple(k * a for a in self.components))

    def is_zero(self) -> bool:
        return not any(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> int:
        return self.components[i]

    def __repr__(self) -> str:
        return f"AbVector{self.components}"
