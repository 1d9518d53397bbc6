"""
Voltage assignments on Dip_5 with values in Z_p^n, their derived covers and lifts.

A voltage is T-reduced: arc 0 is the tree arc and carries the zero vector, so
the fundamental closed walks W_i = a_i a_0^{-1} carry zeta[1..4].
"""

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from .dipole import ARCS, DipAut, all_dip_auts, arc_orbit, named_dip_auts
from ..algebra import AbelianSpec, FpMatrix, is_prime, rank_mod_p, solve_extension
from ..exceptions import CoverError, NotALift, NotSpanning, ParallelArcs, UnknownFamily
from ..graphs import Graph
from ..graphs.constructions import (
    FamilyId,
    connection_h_parts,
    family_parameters,
)
from ..groups import Perm, PermGroup, tuple_orbit_transitive
from ..log import get_logger
from ..types import VoltageDict

logger = get_logger(__name__)

Vector = tuple[int, ...]

COVER_FAMILIES = (
    FamilyId.CGD1_P2,
    FamilyId.CGD2_P2,
    FamilyId.CGD_P3,
    FamilyId.CGD_P4,
)


@dataclass(frozen=True)
class Dip5Voltage:
    """T-reduced voltage assignment zeta: arcs of Dip_5 -> F_p^n."""
    p: int
    n: int
    zeta: tuple[Vector, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise CoverError(f"{self.p} is not a prime")
        if not 1 <= self.n <= 4:
            raise CoverError(f"rank {self.n} outside 1..4")
        if len(self.zeta) != ARCS or any(len(v) != self.n for v in self.zeta):
            raise CoverError(f"zeta must be {ARCS} vectors of length {self.n}")
        reduced = tuple(tuple(int(x) % self.p for x in v) for v in self.zeta)
        if any(reduced[0]):
            raise CoverError("the tree arc must carry the zero voltage")
        object.__setattr__(self, 'zeta', reduced)

    @classmethod
    def from_vectors(cls, p: int, vectors: Sequence[Sequence[int]]) -> "Dip5Voltage":
        return cls(p, len(vectors[0]), tuple(tuple(v) for v in vectors))

    @property
    def spec(self) -> AbelianSpec:
        return AbelianSpec.elementary(self.p, self.n)

    @property
    def fibre_size(self) -> int:
        return self.p ** self.n

    def is_spanning(self) -> bool:
        return rank_mod_p(self.zeta[1:], self.p) == self.n

    def has_parallel_arcs(self) -> bool:
        return len(set(self.zeta)) < ARCS

    def validate(self) -> None:
        """
        Raises:
            NotSpanning: if the cotree voltages do not span F_p^n
            ParallelArcs: if two arcs carry the same voltage
        """
        if not self.is_spanning():
            raise NotSpanning(f"cotree voltages of {self.zeta} do not span F_{self.p}^{self.n}")
        if self.has_parallel_arcs():
            raise ParallelArcs(f"{self.zeta} repeats a voltage")

    def to_dict(self) -> VoltageDict:
        return {"p": self.p, "n": self.n, "zeta": [list(v) for v in self.zeta]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Dip5Voltage":
        try:
            return cls(int(data["p"]), int(data["n"]), tuple(tuple(int(x) for x in v) for v in data["zeta"]))
        except (KeyError, TypeError, ValueError) as e:
            raise CoverError(f"malformed voltage: {e}") from e


# =============================================================================
# DERIVED COVERS
# =============================================================================

@dataclass
class DerivedCover:
    """Dip_5 x_zeta Z_p^n; (u, x) has index radix(x), (v, y) has p^n + radix(y)."""
    voltage: Dip5Voltage
    graph: Graph

    def label(self, index: int) -> tuple[str, Vector]:
        side, rest = divmod(index, self.voltage.fibre_size)
        return ("uv"[side], self.voltage.spec.from_radix(rest).components)

    def vertex(self, side: str, x: Sequence[int]) -> int:
        offset = 0 if side == "u" else self.voltage.fibre_size
        return offset + self.voltage.spec.radix(self.voltage.spec.vector(x))


def derived(z: Dip5Voltage) -> DerivedCover:
    """
    The derived cover: (u, x) ~ (v, x + zeta[i]) for every arc i.

    Raises:
        NotSpanning, ParallelArcs
    """
    z.validate()
    spec = z.spec
    size = z.fibre_size
    table = spec.component_table()
    zeta = np.array(z.zeta, dtype=np.int64)
    forward = np.stack([size + spec.radix_array((table + zeta[i]) % z.p) for i in range(ARCS)], axis=1)
    backward = np.stack([spec.radix_array((table - zeta[i]) % z.p) for i in range(ARCS)], axis=1)
    rows = np.concatenate([forward, backward])
    rows.sort(axis=1)
    graph = Graph(2 * size, tuple(tuple(int(x) for x in row) for row in rows))
    return DerivedCover(z, graph)


def fundamental_voltages(z: Dip5Voltage) -> tuple[Vector, ...]:
    """Voltages of W_1..W_4; zeta[0] is zero so these are zeta[1..4]."""
    return z.zeta[1:]


def _induced_targets(zeta: Sequence[Sequence[int]], s: DipAut, modulus: Optional[int]) -> list[Vector]:
    base = zeta[s.pi[0]]
    sign = -1 if s.swap else 1
    targets = []
    for i in range(1, ARCS):
        diff = [sign * (a - b) for a, b in zip(zeta[s.pi[i]], base)]
        targets.append(tuple(x % modulus for x in diff) if modulus else tuple(diff))
    return targets


def induced_pairs(z: Dip5Voltage, s: DipAut) -> list[tuple[Vector, Vector]]:
    """(zeta(W_i), zeta(W_i^s)) for the four fundamental closed walks."""
    return list(zip(fundamental_voltages(z), _induced_targets(z.zeta, s, z.p)))


def render_word(coefficients: Sequence[int], letters: str = "abcd") -> str:
    """Multiplicative word for an integer combination, positive letters first."""
    def power(letter: str, k: int) -> str:
        return letter if k == 1 else f"{letter}^{{{k}}}"
    positive = [power(c, k) for c, k in zip(letters, coefficients) if k > 0]
    negative = [power(c, k) for c, k in zip(letters, coefficients) if k < 0]
    return "".join(positive + negative) or "1"


def symbolic_table() -> dict[str, list[str]]:
    """Images of W_1..W_4 under the named automorphisms, over free letters a, b, c, d."""
    basis = [(0, 0, 0, 0)] + [tuple(1 if j == k else 0 for j in range(4)) for k in range(4)]
    table = {"zeta": [render_word(v) for v in basis[1:]]}
    for name, s in named_dip_auts().items():
        table[name] = [render_word(t) for t in _induced_targets(basis, s, None)]
    return table


# =============================================================================
# LIFTS
# =============================================================================

def lifts(z: Dip5Voltage, s: DipAut) -> Optional[FpMatrix]:
    """The automorphism of F_p^n extending s on fundamental voltages, or None."""
    pairs = induced_pairs(z, s)
    return solve_extension(z.p, [a for a, _ in pairs], [b for _, b in pairs])


def lift_images(z: Dip5Voltage, s: DipAut, matrix: FpMatrix) -> np.ndarray:
    """
    Vertex images of the lift of s determined by ``matrix``.

    Raises:
        NotALift: if the matrix does not satisfy the lifting equations
    """
    for source, target in induced_pairs(z, s):
        if matrix.apply(source) != target:
            raise NotALift(f"{matrix.to_list()} does not send {source} to {target}")
    spec = z.spec
    size = z.fibre_size
    table = spec.component_table()
    moved = (table @ matrix.to_array().T) % z.p
    shift = np.array(z.zeta[s.pi[0]], dtype=np.int64)
    plain = spec.radix_array(moved)
    shifted = spec.radix_array((moved + shift) % z.p)
    if s.swap:
        return np.concatenate([size + shifted, plain])
    return np.concatenate([plain, size + shifted])


def lift_to_cover(z: Dip5Voltage, s: DipAut, matrix: FpMatrix) -> Perm:
    """The lift of s as a permutation of the derived cover's vertices."""
    return Perm(lift_images(z, s, matrix), check=False)


def translation(z: Dip5Voltage, k: int) -> Perm:
    """Covering transformation x -> x + e_k on both fibres."""
    spec = z.spec
    table = spec.component_table()
    table[:, k] = (table[:, k] + 1) % z.p
    images = spec.radix_array(table)
    return Perm(np.concatenate([images, z.fibre_size + images]), check=False)


@dataclass
class LiftingGroup:
    """The automorphisms of Dip_5 that lift, with one extending matrix each."""
    elements: tuple[DipAut, ...]
    matrices: dict[DipAut, FpMatrix] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def star_order(self) -> int:
        """|L*|, the part fixing u and v."""
        return sum(1 for s in self.elements if not s.swap)

    @property
    def arc_transitive(self) -> bool:
        return len(arc_orbit(self.elements)) == 2 * ARCS

    def is_closed(self) -> bool:
        members = set(self.elements)
        return all(s * t in members for s in self.elements for t in self.elements) and \
            all(s.inverse() in members for s in self.elements)

    def generators(self) -> list[DipAut]:
        """A generating subset, chosen greedily through the action on the 10 arcs."""
        chosen: list[DipAut] = []
        on_arcs = PermGroup(2 * ARCS, [])
        for s in self.elements:
            perm = Perm([_arc_index(s.apply_arc(_arc_of(a))) for a in range(2 * ARCS)])
            if on_arcs.contains(perm):
                continue
            on_arcs = PermGroup(2 * ARCS, list(on_arcs.generators) + [perm])
            chosen.append(s)
        return chosen


def _arc_of(index: int) -> tuple[int, int]:
    return index % ARCS, index // ARCS


def _arc_index(arc: tuple[int, int]) -> int:
    return arc[0] + ARCS * arc[1]


def lifting_group(z: Dip5Voltage) -> LiftingGroup:
    """Every s in Aut(Dip_5) whose voltage map extends to an automorphism of F_p^n."""
    matrices = {}
    for s in all_dip_auts():
        m = lifts(z, s)
        if m is not None:
            matrices[s] = m
    return LiftingGroup(tuple(matrices), matrices)


def fibre_preserving_group(z: Dip5Voltage) -> PermGroup:
    """Covering translations together with lifts of generators of L."""
    group = lifting_group(z)
    gens = [translation(z, k) for k in range(z.n)]
    gens += [lift_to_cover(z, s, group.matrices[s]) for s in group.generators()]
    return PermGroup(2 * z.fibre_size, gens)


def cover_is_arc_transitive(z: Dip5Voltage) -> bool:
    """Arc-transitivity of the fibre-preserving group, checked on the cover itself."""
    cover = derived(z)
    return tuple_orbit_transitive(fibre_preserving_group(z), cover.graph.arcs())


# =============================================================================
# ISOMORPHISM OF COVERS
# =============================================================================

def witness_for(z1: Dip5Voltage, z2: Dip5Voltage, delta: DipAut) -> Optional[FpMatrix]:
    """eta with eta(zeta_1(W_i)) = zeta_2(W_i^delta) for all i, if one exists."""
    if (z1.p, z1.n) != (z2.p, z2.n):
        return None
    return solve_extension(z1.p, list(fundamental_voltages(z1)), _induced_targets(z2.zeta, delta, z2.p))


def covers_isomorphic(z1: Dip5Voltage, z2: Dip5Voltage) -> Optional[tuple[DipAut, FpMatrix]]:
    """First (delta, eta) in (swap, pi) order witnessing an isomorphism of the covers."""
    if (z1.p, z1.n) != (z2.p, z2.n):
        return None
    for delta in all_dip_auts():
        eta = witness_for(z1, z2, delta)
        if eta is not None:
            return delta, eta
    return None


# =============================================================================
# FAMILY VOLTAGES
# =============================================================================

def family_voltage(family_id: FamilyId, p: int, *, ell: Optional[int] = None,
                   lam: Optional[int] = None) -> Dip5Voltage:
    """
    The canonical voltage whose derived cover is the family graph.

    Raises:
        UnknownFamily: for families that are not Z_p^n-covers of Dip_5
        NoOrder5Element, NoSquareRootOf5, UnsupportedParameter
    """
    if family_id not in COVER_FAMILIES:
        raise UnknownFamily(f"{family_id.value} is not a voltage-cover family")
    params = family_parameters(family_id, p, ell=ell, lam=lam)
    return Dip5Voltage.from_vectors(p, connection_h_parts(family_id, p, params))


def gd_relabeling(z: Dip5Voltage) -> list[int]:
    """
    Map derived-cover vertices to GD_{Z_p^n} element indices.

    (u, x) goes to (-x, 0) and (v, y) to (y, 1); under it the cover equals
    Cay(GD, {(zeta_i, 1)}).
    """
    spec = z.spec
    size = z.fibre_size
    table = spec.component_table()
    negated = spec.radix_array((-table) % z.p)
    return [int(x) for x in negated] + [size + i for i in range(size)]


def describe(z: Dip5Voltage) -> dict[str, Any]:
    group = lifting_group(z)
    logger.debug(f"[*] Lifting group of {z.zeta}: |L| = {group.order}")
    return {
        "voltage": z.to_dict(),
        "lifting_group_order": group.order,
        "star_order": group.star_order,
        "arc_transitive": group.arc_transitive,
    }
