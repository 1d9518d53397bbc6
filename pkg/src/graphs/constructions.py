"""
Cayley graphs on generalized dihedral groups and the named pentavalent families.

Family ids are stable strings: "K6", "Q<n>", "FQ<n>", "CD(p)", "CD(p^2)",
"CGD1(p^2)", "CGD2(p^2)", "CGD(p^3)", "CGD(p^4)". Instances substitute the
parameter, e.g. "CGD1(11^2)" or "CD(31)".
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .graph import Graph, complete_graph
from ..algebra import (
    element_of_order,
    elements_of_order,
    has_order,
    is_prime,
    sqrt5,
    unit_inverse,
)
from ..exceptions import (
    IdentityInS,
    NoOrder5Element,
    NoSquareRootOf5,
    NotSymmetricSet,
    UnknownFamily,
    UnsupportedParameter,
)
from ..groups import (
    GDElement,
    GroupSpec,
    Perm,
    PermGroup,
    aut_fixing_s,
    inverse,
    right_regular_generators,
    vertex_permutation,
)
from ..groups.gdgroup import element_table


class FamilyId(str, Enum):
    K6 = "K6"
    QN = "Q<n>"
    FQN = "FQ<n>"
    CD_P = "CD(p)"
    CD_P2 = "CD(p^2)"
    CGD1_P2 = "CGD1(p^2)"
    CGD2_P2 = "CGD2(p^2)"
    CGD_P3 = "CGD(p^3)"
    CGD_P4 = "CGD(p^4)"


GD_FAMILIES = (
    FamilyId.CD_P,
    FamilyId.CD_P2,
    FamilyId.CGD1_P2,
    FamilyId.CGD2_P2,
    FamilyId.CGD_P3,
    FamilyId.CGD_P4,
)

# Order in which quotient graphs are matched against families
RECOGNITION_ORDER = (
    FamilyId.K6,
    FamilyId.FQN,
    FamilyId.CD_P,
    FamilyId.CGD1_P2,
    FamilyId.CGD2_P2,
    FamilyId.CGD_P3,
    FamilyId.CGD_P4,
)

_EXPONENT = {
    FamilyId.CD_P: 1,
    FamilyId.CD_P2: 2,
    FamilyId.CGD1_P2: 2,
    FamilyId.CGD2_P2: 2,
    FamilyId.CGD_P3: 3,
    FamilyId.CGD_P4: 4,
}

_INSTANCE_RE = re.compile(r"^(K6|Q(\d+|<n>)|FQ(\d+|<n>)|CD|CGD1|CGD2|CGD)(?:\((\w+)(?:\^(\d))?\))?$")


def parse_family_id(text: str) -> tuple[FamilyId, Optional[int]]:
    """
    Parse a family id or instance string.

    Returns:
        (family, parameter) where parameter is n for cubes, p for the rest,
        and None when the text is a template such as "CD(p)".

    Raises:
        UnknownFamily: if the text names no family
    """
    text = text.strip().replace(" ", "")
    match = _INSTANCE_RE.match(text)
    if not match:
        raise UnknownFamily(f"unknown family {text!r}")
    head, q_n, fq_n, param, exponent = match.groups()
    if head == "K6":
        return FamilyId.K6, None
    if head.startswith("FQ"):
        return FamilyId.FQN, None if fq_n == "<n>" else int(fq_n)
    if head.startswith("Q"):
        return FamilyId.QN, None if q_n == "<n>" else int(q_n)
    if param is None:
        raise UnknownFamily(f"family {text!r} needs a parameter")
    power = int(exponent) if exponent else 1
    table = {
        ("CD", 1): FamilyId.CD_P,
        ("CD", 2): FamilyId.CD_P2,
        ("CGD1", 2): FamilyId.CGD1_P2,
        ("CGD2", 2): FamilyId.CGD2_P2,
        ("CGD", 3): FamilyId.CGD_P3,
        ("CGD", 4): FamilyId.CGD_P4,
    }
    family = table.get((head, power))
    if family is None:
        raise UnknownFamily(f"unknown family {text!r}")
    if param == "p":
        return family, None
    if not param.isdigit():
        raise UnknownFamily(f"bad parameter in {text!r}")
    return family, int(param)


def format_family_id(family: FamilyId, parameter: Optional[int] = None) -> str:
    """Instance string such as "CGD(5^3)"; the template when parameter is None."""
    if parameter is None or family == FamilyId.K6:
        return family.value
    if family == FamilyId.QN:
        return f"Q{parameter}"
    if family == FamilyId.FQN:
        return f"FQ{parameter}"
    return family.value.replace("p", str(parameter))


@dataclass
class NamedGraph:
    """A constructed family member with its algebraic labels."""
    family: FamilyId
    parameter: Optional[int]
    graph: Graph
    group: Optional[GroupSpec] = None
    connection: tuple[GDElement, ...] = ()
    params: dict[str, int] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return format_family_id(self.family, self.parameter)

    def label(self, v: int) -> GDElement:
        """Group element of vertex v (GD families only)."""
        if self.group is None:
            raise UnsupportedParameter(f"{self.name} has no group labels")
        return self.group.from_index(v)

    def vertex(self, x: GDElement) -> int:
        if self.group is None:
            raise UnsupportedParameter(f"{self.name} has no group labels")
        return self.group.index(x)


# =============================================================================
# CAYLEY GRAPHS
# =============================================================================

def left_multiplication_images(group: GroupSpec, s: GDElement) -> np.ndarray:
    """Index array of g -> s*g over all g."""
    table, flips = element_table(group)
    moduli = np.array(group.h_spec.moduli, dtype=np.int64)
    sign = -1 if s.flip else 1
    h = (np.array(s.h_part.components, dtype=np.int64) + sign * table) % moduli
    f = flips ^ s.flip
    return f * group.h_spec.order + group.h_spec.radix_array(h)


def cayley(group: GroupSpec, connection: Sequence[GDElement]) -> Graph:
    """
    Cay(G, S): vertices indexed as in ``elements(G)``, g adjacent to s*g.

    Raises:
        IdentityInS: if the identity lies in S
        NotSymmetricSet: if S is not closed under inverses
    """
    members = set(connection)
    if len(members) != len(connection):
        raise NotSymmetricSet("connection set has repeated elements")
    if group.identity() in members:
        raise IdentityInS("identity in connection set")
    for s in connection:
        if inverse(s) not in members:
            raise NotSymmetricSet(f"inverse of {s!r} missing")
    if not connection:
        return Graph(group.order, tuple(() for _ in range(group.order)))
    columns = np.stack([left_multiplication_images(group, s) for s in connection], axis=1)
    columns.sort(axis=1)
    return Graph(group.order, tuple(tuple(int(x) for x in row) for row in columns))


def cayley_neighbors(group: GroupSpec, connection: Sequence[GDElement]):
    """Neighbor rule g -> [s*g] on elements, for implicit large Cayley graphs."""
    def neighbors(g: GDElement) -> list[GDElement]:
        return [s * g for s in connection]
    return neighbors


# =============================================================================
# PARAMETERS
# =============================================================================

def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise UnsupportedParameter(f"{p} is not a prime")


def _order5_unit(p: int, modulus: int, ell: Optional[int]) -> int:
    """ell = 1 at p = 5, else the smallest unit of order 5 modulo ``modulus``."""
    if ell is not None:
        if p == 5 and ell % modulus == 1:
            return 1
        if not has_order(ell, 5, modulus):
            raise NoOrder5Element(f"{ell} does not have order 5 modulo {modulus}")
        return ell % modulus
    if p == 5:
        return 1
    if (p - 1) % 5 != 0:
        raise NoOrder5Element(f"5 does not divide {p} - 1")
    found = element_of_order(5, modulus)
    if found is None:
        raise NoOrder5Element(f"no unit of order 5 modulo {modulus}")
    return found


def _cd_parts(ell: int, m: int) -> list[int]:
    """h-parts 0, 1, l+1, l^2+l+1, l^3+l^2+l+1 of the dihedral connection set."""
    parts = [0]
    acc = 0
    for k in range(4):
        acc = (acc + pow(ell, k, m)) % m
        parts.append(acc)
    return parts


def cgd2_exponent(p: int, lam: int) -> int:
    """i = 2^{-1}(1 + lambda) mod p."""
    return (unit_inverse(2, p) * (1 + lam)) % p


def resolve_lambda(p: int, lam: Optional[int] = None) -> int:
    if p == 2:
        raise UnsupportedParameter("CGD2 needs an odd prime")
    if lam is not None:
        if (lam * lam - 5) % p != 0 or p == 5:
            raise NoSquareRootOf5(f"{lam}^2 is not 5 modulo {p}")
        return lam % p
    found = sqrt5(p)
    if found is None:
        raise NoSquareRootOf5(f"5 is not a square modulo {p}")
    return found


def family_parameters(family: FamilyId, p: int, ell: Optional[int] = None,
                      lam: Optional[int] = None) -> dict[str, int]:
    """The parameters a family instance uses (ell, lam, i), validated."""
    _require_prime(p)
    if family in (FamilyId.CD_P, FamilyId.CGD1_P2, FamilyId.CGD_P3):
        return {"ell": _order5_unit(p, p, ell)}
    if family == FamilyId.CD_P2:
        # the order-5 units mod 25 give a graph that is not arc-transitive
        if (p - 1) % 5 != 0:
            raise NoOrder5Element(f"CD(p^2) needs 5 to divide p - 1, got p = {p}")
        return {"ell": _order5_unit(p, p * p, ell)}
    if family == FamilyId.CGD2_P2:
        lam = resolve_lambda(p, lam)
        return {"lam": lam, "i": cgd2_exponent(p, lam)}
    return {}


def connection_h_parts(family: FamilyId, p: int, params: dict[str, int]) -> list[tuple[int, ...]]:
    """h-parts of the five flip-1 connection-set elements."""
    if family == FamilyId.CD_P:
        return [(x,) for x in _cd_parts(params["ell"], p)]
    if family == FamilyId.CD_P2:
        return [(x,) for x in _cd_parts(params["ell"], p * p)]
    if family == FamilyId.CGD1_P2:
        ell = params["ell"]
        inv_l1 = unit_inverse(ell + 1, p)
        b = ((ell * inv_l1) % p, unit_inverse(ell, p))
        c = (ell % p, inv_l1)
        return [(0, 0), (1, 0), b, c, (0, 1)]
    if family == FamilyId.CGD2_P2:
        i = params["i"]
        return [(0, 0), (1, 0), (i, 1), (1, i), (0, 1)]
    if family == FamilyId.CGD_P3:
        ell = params["ell"]
        c = ((-ell * ell) % p, (-ell) % p, (-pow(ell, 4, p)) % p)
        return [(0, 0, 0), (1, 0, 0), (0, 1, 0), c, (0, 0, 1)]
    if family == FamilyId.CGD_P4:
        return [(0, 0, 0, 0)] + [tuple(1 if j == k else 0 for j in range(4)) for k in range(4)]
    raise UnknownFamily(f"{family.value} is not a generalized dihedral family")


def group_for(family: FamilyId, p: int) -> GroupSpec:
    if family == FamilyId.CD_P2:
        return GroupSpec.over(p * p)
    return GroupSpec.over(*([p] * _EXPONENT[family]))


# =============================================================================
# FAMILIES
# =============================================================================

def hypercube(n: int) -> Graph:
    """Q_n on bitmasks."""
    if n < 1:
        raise UnsupportedParameter("hypercube needs n >= 1")
    size = 1 << n
    return Graph(size, tuple(tuple(sorted(v ^ (1 << k) for k in range(n))) for v in range(size)))


def folded_hypercube(n: int) -> Graph:
    """FQ_n: Q_n plus the all-ones chord at each vertex."""
    if n < 2:
        raise UnsupportedParameter("folded hypercube needs n >= 2")
    size = 1 << n
    mask = size - 1
    return Graph(size, tuple(
        tuple(sorted([v ^ (1 << k) for k in range(n)] + [v ^ mask])) for v in range(size)
    ))


def hypercube_antipodal_cells(n: int) -> list[list[int]]:
    """Antipodal pairs {v, ~v} of Q_n, ordered by smaller element."""
    mask = (1 << n) - 1
    return [[v, v ^ mask] for v in range(1 << n) if v < v ^ mask]


def family(family_id: FamilyId | str, parameter: Optional[int] = None, *,
           ell: Optional[int] = None, lam: Optional[int] = None) -> NamedGraph:
    """
    Construct a family member.

    Args:
        family_id: FamilyId or id string (an instance string carries its parameter)
        parameter: p, or n for the cube families
        ell: override for the order-5 unit
        lam: override for the square root of 5

    Raises:
        NoOrder5Element, NoSquareRootOf5, UnsupportedParameter, UnknownFamily
    """
    if isinstance(family_id, str) and not isinstance(family_id, FamilyId):
        family_id, parsed = parse_family_id(family_id)
        parameter = parsed if parsed is not None else parameter
    if family_id == FamilyId.K6:
        return NamedGraph(FamilyId.K6, None, complete_graph(6))
    if parameter is None:
        raise UnsupportedParameter(f"{family_id.value} needs a parameter")
    if family_id == FamilyId.QN:
        return NamedGraph(FamilyId.QN, parameter, hypercube(parameter))
    if family_id == FamilyId.FQN:
        return NamedGraph(FamilyId.FQN, parameter, folded_hypercube(parameter))

    p = parameter
    params = family_parameters(family_id, p, ell=ell, lam=lam)
    group = group_for(family_id, p)
    connection = tuple(group.element(h, 1) for h in connection_h_parts(family_id, p, params))
    return NamedGraph(family_id, p, cayley(group, connection), group, connection, params)


def family_available(family_id: FamilyId, p: int) -> bool:
    """True when the arithmetic prerequisites of the family hold at p."""
    try:
        family_parameters(family_id, p)
    except (NoOrder5Element, NoSquareRootOf5, UnsupportedParameter):
        return False
    return True


def order5_units(p: int) -> list[int]:
    """Every ell usable for CD(p); just 1 at p = 5."""
    return [1] if p == 5 else elements_of_order(5, p)


# =============================================================================
# NORMALIZER OF THE REGULAR REPRESENTATION
# =============================================================================

def normalizer_group(ng: NamedGraph) -> PermGroup:
    """
    R(G) x| Aut(G, S) acting on the vertices of Cay(G, S).

    Aut(G, S) embeds in Sym(S), so a generating subset is picked by growing a
    degree-5 group of the induced S-permutations.
    """
    if ng.group is None:
        raise UnsupportedParameter(f"{ng.name} is not a generalized dihedral family")
    stabilizer = aut_fixing_s(ng.group, ng.connection)
    chosen: list[Perm] = []
    on_s = PermGroup(len(ng.connection), [])
    for aut, pi in zip(stabilizer.automorphisms, stabilizer.permutations):
        sigma = Perm(pi)
        if on_s.contains(sigma):
            continue
        on_s = PermGroup(len(ng.connection), list(on_s.generators) + [sigma])
        chosen.append(vertex_permutation(ng.group, aut))
    return PermGroup(ng.group.order, right_regular_generators(ng.group) + chosen)
