"""
Small dense linear algebra over prime fields.

Matrices are immutable tuples of rows; dimensions here never exceed five,
so plain integer row reduction is used throughout.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..exceptions import AlgebraError, SourcesDoNotSpan

Vector = tuple[int, ...]


@dataclass(frozen=True)
class FpMatrix:
    """n x n matrix over F_p; M @ v maps column vectors."""
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise AlgebraError("matrix must be square")
        object.__setattr__(self, 'rows', tuple(tuple(int(x) % self.p for x in r) for r in self.rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, p: int, n: int, k: int) -> "FpMatrix":
        return cls(p, tuple(tuple(k if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, p: int, columns: Sequence[Sequence[int]]) -> "FpMatrix":
        n = len(columns)
        return cls(p, tuple(tuple(columns[j][i] for j in range(n)) for i in range(n)))

    def columns(self) -> list[Vector]:
        return [tuple(r[j] for r in self.rows) for j in range(self.n)]

    def apply(self, v: Sequence[int]) -> Vector:
        return tuple(sum(a * b for a, b in zip(r, v)) % self.p for r in self.rows)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        cols = other.columns()
        return FpMatrix(self.p, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) % self.p for c in cols) for r in self.rows
        ))

    def determinant(self) -> int:
        return determinant_mod_p(self.rows, self.p)

    def is_invertible(self) -> bool:
        return self.determinant() != 0

    def inverse(self) -> "FpMatrix":
        return FpMatrix(self.p, invert_mod_p(self.rows, self.p))

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _echelon(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Row echelon form and pivot columns."""
    m = [[x % p for x in r] for r in rows]
    pivots = []
    row = 0
    width = len(m[0]) if m else 0
    for col in range(width):
        pivot = next((i for i in range(row, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def rank_mod_p(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank of a list of vectors over F_p."""
    if not vectors:
        return 0
    return len(_echelon(vectors, p)[1])


def determinant_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    n = len(m)
    det = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = (det * m[col][col]) % p
        inv = pow(m[col][col], -1, p)
        for i in range(col + 1, n):
            if m[i][col]:
                f = (m[i][col] * inv) % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[col])]
    return det % p


def invert_mod_p(rows: Sequence[Sequence[int]], p: int) -> tuple[tuple[int, ...], ...]:
    """Inverse via Gauss-Jordan on [A | I]."""
    n = len(rows)
    augmented = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    reduced, pivots = _echelon(augmented, p)
    if pivots[:n] != list(range(n)):
        raise AlgebraError("matrix is singular")
    return tuple(tuple(r[n:]) for r in reduced[:n])


def independent_positions(vectors: Sequence[Sequence[int]], p: int) -> list[int]:
    """Indices of the first maximal independent subsequence, in order."""
    chosen: list[int] = []
    basis: list[list[int]] = []
    for i, v in enumerate(vectors):
        candidate = basis + [list(v)]
        if rank_mod_p(candidate, p) > len(basis):
            basis = candidate
            chosen.append(i)
    return chosen


def solve_extension(
    p: int,
    sources: Sequence[Sequence[int]],
    targets: Sequence[Sequence[int]],
) -> Optional[FpMatrix]:
    """
    Find an invertible M with M @ source_i = target_i for every i.

    The map is forced on the first spanning subset of sources; it is then
    checked against the remaining (dependent) sources.

    Returns:
        The matrix, or None if the induced map is inconsistent or singular.

    Raises:
        SourcesDoNotSpan: if the sources have rank below the dimension
    """
    if len(sources) != len(targets):
        raise AlgebraError("sources and targets must have equal length")
    if not sources:
        raise SourcesDoNotSpan("no source vectors")
    n = len(sources[0])
    positions = independent_positions(sources, p)
    if len(positions) < n:
        raise SourcesDoNotSpan(f"sources have rank {len(positions)} < {n}")

    basis = FpMatrix.from_columns(p, [sources[i] for i in positions])
    images = FpMatrix.from_columns(p, [targets[i] for i in positions])
    matrix = images @ basis.inverse()

    for s, t in zip(sources, targets):
        if matrix.apply(s) != tuple(x % p for x in t):
            return None
    if not matrix.is_invertible():
        return None
    return matrix
