"""
Classification of connected symmetric Z_p^n-covers of Dip_5 (n = 2, 3, 4).

Two independent strategies produce the same class list:

- brute: every cotree assignment in GL(n, p)-canonical form, filtered by the
  lifting criterion and deduplicated with the cover isomorphism test
- analytic: the voltages solving the parameter equations of each rank

Matched classes are reported with the family's canonical voltage as
representative, so the two lists compare equal element by element.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Iterator, Optional

import numpy as np

from .dipole import ALPHA, ARCS
from .voltage import (
    COVER_FAMILIES,
    Dip5Voltage,
    LiftingGroup,
    covers_isomorphic,
    family_voltage,
    lifting_group,
)
from ..algebra import elements_of_order, is_prime, unit_inverse
from ..exceptions import BudgetExceeded, CoverError
from ..graphs.constructions import (
    FamilyId,
    RECOGNITION_ORDER,
    connection_h_parts,
    family_available,
)
from ..log import get_logger
from ..types import CoverClassDict
from .. import config

logger = get_logger(__name__)

RANK_OF_FAMILY = {
    FamilyId.CGD1_P2: 2,
    FamilyId.CGD2_P2: 2,
    FamilyId.CGD_P3: 3,
    FamilyId.CGD_P4: 4,
}


class Strategy(str, Enum):
    BRUTE = "brute"
    ANALYTIC = "analytic"


@dataclass(frozen=True)
class CoverClass:
    """One isomorphism class of arc-transitive covers."""
    representative: Dip5Voltage
    lifting_group_order: int
    arc_transitive: bool
    matched_family: Optional[FamilyId] = None

    def to_dict(self) -> CoverClassDict:
        return {
            "representative": self.representative.to_dict(),
            "lifting_group_order": self.lifting_group_order,
            "arc_transitive": self.arc_transitive,
            "matched_family": self.matched_family.value if self.matched_family else None,
        }


# =============================================================================
# BRUTE FORCE
# =============================================================================

def _check_budget(p: int, n: int) -> None:
    limit = {2: config.BRUTE_MAX_P_RANK2, 3: config.BRUTE_MAX_P_RANK3}.get(n)
    if limit is not None and p > limit:
        raise BudgetExceeded(f"brute classification for n = {n} is limited to p <= {limit}")


def _digits(p: int, r: int, n: int) -> np.ndarray:
    """All vectors of F_p^n supported on the first r coordinates, radix order."""
    index = np.arange(p ** r, dtype=np.int64)
    table = np.zeros((p ** r, n), dtype=np.int64)
    for j in range(r - 1, -1, -1):
        table[:, j] = index % p
        index //= p
    return table


def canonical_batches(p: int, n: int) -> Iterator[tuple[tuple[int, ...], np.ndarray]]:
    """
    Pivot positions with cotree assignments (rows, 4, n) in reduced echelon form.

    Pivot positions carry e_0, e_1, ... in order; a non-pivot position after
    r pivots ranges over span(e_0..e_{r-1}).
    """
    cotree = ARCS - 1
    for pivots in combinations(range(cotree), n):
        spans = [sum(1 for q in pivots if q < pos) for pos in range(cotree)]
        free = [pos for pos in range(cotree) if pos not in pivots and spans[pos] > 0]
        base = np.zeros((cotree, n), dtype=np.int64)
        for r, pos in enumerate(pivots):
            base[pos, r] = 1
        if not free:
            yield pivots, base[None, :, :]
            continue
        tables = {pos: _digits(p, spans[pos], n) for pos in free}
        head, last = free[:-1], free[-1]
        for choice in product(*(range(len(tables[pos])) for pos in head)):
            row = base.copy()
            for pos, k in zip(head, choice):
                row[pos] = tables[pos][k]
            batch = np.repeat(row[None, :, :], len(tables[last]), axis=0)
            batch[:, last, :] = tables[last]
            yield pivots, batch


def _alpha_survivors(pivots: tuple[int, ...], batch: np.ndarray, p: int) -> np.ndarray:
    """Rows with distinct nonzero voltages on which alpha's forced map is consistent."""
    rows, cotree, n = batch.shape
    nonzero = batch.any(axis=2).all(axis=1)
    distinct = np.ones(rows, dtype=bool)
    for i, j in combinations(range(cotree), 2):
        distinct &= (batch[:, i] != batch[:, j]).any(axis=1)
    full = np.concatenate([np.zeros((rows, 1, n), dtype=np.int64), batch], axis=1)
    pi = ALPHA.pi
    targets = (full[:, list(pi[1:]), :] - full[:, [pi[0]], :]) % p
    matrices = np.transpose(targets[:, list(pivots), :], (0, 2, 1))
    images = np.einsum('kar,kjr->kja', matrices, batch) % p
    consistent = (images == targets).all(axis=(1, 2))
    return batch[nonzero & distinct & consistent]


def _brute_candidates(p: int, n: int) -> list[Dip5Voltage]:
    found = []
    for pivots, batch in canonical_batches(p, n):
        for row in _alpha_survivors(pivots, batch, p):
            zeta = [(0,) * n] + [tuple(int(x) for x in v) for v in row]
            found.append(Dip5Voltage(p, n, tuple(zeta)))
    logger.debug(f"[*] {len(found)} canonical assignments pass the rotation test (p={p}, n={n})")
    return found


# =============================================================================
# PARAMETER EQUATIONS
# =============================================================================

def _analytic_candidates(p: int, n: int) -> list[Dip5Voltage]:
    vectors: list[list[tuple[int, ...]]] = []
    if n == 2:
        for i in range(p):
            if (i * i - i - 1) % p == 0:
                vectors.append([(0, 0), (1, 0), (i, 1), (1, i), (0, 1)])
        for ell in elements_of_order(5, p):
            vectors.append(connection_h_parts(FamilyId.CGD1_P2, p, {"ell": ell}))
    elif n == 3:
        for j in range(1, p):
            k = unit_inverse(j, p)
            i = (-j * j) % p
            if (i * j - i - j - k + 1) % p == 0:
                vectors.append([(0, 0, 0), (1, 0, 0), (0, 1, 0), (i, j, k), (0, 0, 1)])
    else:
        vectors.append([(0,) * 4] + [tuple(1 if j == k else 0 for j in range(4)) for k in range(4)])
    found = []
    for vs in vectors:
        z = Dip5Voltage.from_vectors(p, vs)
        if z.is_spanning() and not z.has_parallel_arcs():
            found.append(z)
    return found


# =============================================================================
# CLASSIFICATION
# =============================================================================

def _lifting_groups(candidates: list[Dip5Voltage], workers: int) -> list[LiftingGroup]:
    if workers <= 1 or len(candidates) < 2:
        return [lifting_group(z) for z in candidates]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lifting_group, candidates))


def _match_family(z: Dip5Voltage) -> Optional[FamilyId]:
    for fid in COVER_FAMILIES:
        if RANK_OF_FAMILY[fid] != z.n or not family_available(fid, z.p):
            continue
        if covers_isomorphic(z, family_voltage(fid, z.p)) is not None:
            return fid
    return None


def _sort_key(c: CoverClass):
    rank = RECOGNITION_ORDER.index(c.matched_family) if c.matched_family else len(RECOGNITION_ORDER)
    return rank, c.representative.zeta


def classify(p: int, n: int, strategy: Strategy | str = Strategy.BRUTE,
             workers: Optional[int] = None) -> list[CoverClass]:
    """
    Isomorphism classes of connected arc-transitive Z_p^n-covers of Dip_5.

    Raises:
        CoverError: if p is not prime or n is outside 2..4
        BudgetExceeded: if the brute enumeration is over the configured limit
    """
    strategy = Strategy(strategy)
    if not is_prime(p):
        raise CoverError(f"{p} is not a prime")
    if n not in (2, 3, 4):
        raise CoverError(f"rank {n} outside 2..4")
    workers = config.CLASSIFY_WORKERS if workers is None else workers

    if strategy == Strategy.BRUTE:
        _check_budget(p, n)
        candidates = _brute_candidates(p, n)
    else:
        candidates = _analytic_candidates(p, n)

    representatives: list[Dip5Voltage] = []
    for z, group in zip(candidates, _lifting_groups(candidates, workers)):
        if not group.arc_transitive:
            continue
        if any(covers_isomorphic(z, rep) is not None for rep in representatives):
            continue
        representatives.append(z)

    classes = []
    for z in representatives:
        matched = _match_family(z)
        rep = family_voltage(matched, p) if matched else z
        group = lifting_group(rep)
        classes.append(CoverClass(rep, group.order, group.arc_transitive, matched))
    classes.sort(key=_sort_key)
    logger.info(f"[+] {strategy.value}: {len(classes)} symmetric Z_{p}^{n}-cover class(es)")
    return classes
