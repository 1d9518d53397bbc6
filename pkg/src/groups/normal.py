"""
Normal closures, normal-subgroup enumeration and tuple-orbit tests.
"""

from collections import deque
from typing import Sequence

from .perm import Perm
from .permgroup import PermGroup, join, same_subgroup
from ..exceptions import BudgetExceeded, SeedNotInGroup
from ..log import get_logger
from .. import config

logger = get_logger(__name__)


def normal_closure(group: PermGroup, seeds: Sequence[Perm]) -> PermGroup:
    """
    Smallest normal subgroup of ``group`` containing ``seeds``.

    Raises:
        SeedNotInGroup: if a seed is not an element of the group
    """
    for s in seeds:
        if not group.contains(s):
            raise SeedNotInGroup(f"{s!r} is not in the group")
    gens = [s for s in seeds if not s.is_identity()]
    closure = PermGroup(group.degree, gens)
    queue = deque(gens)
    while queue:
        n = queue.popleft()
        for g in group.generators:
            c = n.conjugate(g)
            if not closure.contains(c):
                gens.append(c)
                closure = PermGroup(group.degree, gens)
                queue.append(c)
    return closure


def conjugacy_class_representatives(group: PermGroup) -> list[Perm]:
    """One element per conjugacy class, in element-enumeration order."""
    seen: set[tuple[int, ...]] = set()
    reps = []
    inverses = [g.inverse() for g in group.generators]
    for x in group.elements():
        key = group.base_image(x)
        if key in seen:
            continue
        reps.append(x)
        seen.add(key)
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g, g_inv in zip(group.generators, inverses):
                z = g_inv * y * g
                zk = group.base_image(z)
                if zk not in seen:
                    seen.add(zk)
                    queue.append(z)
    return reps


def _dedup(subgroups: list[PermGroup]) -> list[PermGroup]:
    unique: list[PermGroup] = []
    for n in subgroups:
        if not any(same_subgroup(n, m) for m in unique):
            unique.append(n)
    return unique


def normal_subgroups(group: PermGroup, element_budget: int | None = None) -> list[PermGroup]:
    """
    All normal subgroups, sorted by order.

    Normal closures of conjugacy-class representatives are closed under
    pairwise joins; every normal subgroup is such a join.

    Raises:
        BudgetExceeded: if the group order exceeds the element budget
    """
    budget = config.ELEMENT_BUDGET if element_budget is None else element_budget
    order = group.order()
    if order > budget:
        raise BudgetExceeded(f"group order {order} exceeds element budget {budget}")

    reps = conjugacy_class_representatives(group)
    logger.debug(f"[*] {len(reps)} conjugacy classes in group of order {order}")
    found = _dedup([normal_closure(group, [r]) for r in reps])

    changed = True
    while changed:
        changed = False
        for i in range(len(found)):
            for j in range(i + 1, len(found)):
                a, b = found[i], found[j]
                if a.contains_group(b) or b.contains_group(a):
                    continue
                joined = join(a, b)
                if not any(same_subgroup(joined, m) for m in found):
                    found.append(joined)
                    changed = True
    found.sort(key=lambda n: n.order())
    return found


def is_normal(group: PermGroup, subgroup: PermGroup) -> bool:
    """Every generator conjugate of every subgroup generator stays inside."""
    return all(
        subgroup.contains(n.conjugate(g))
        for g in group.generators
        for n in subgroup.generators
    )


def tuple_orbit_transitive(group: PermGroup, tuples: Sequence[Sequence[int]]) -> bool:
    """True iff the coordinatewise orbit of ``tuples[0]`` is exactly the given set."""
    targets = {tuple(t) for t in tuples}
    start = tuple(tuples[0])
    seen = {start}
    queue = deque([start])
    gens = [g.to_list() for g in group.generators]
    while queue:
        t = queue.popleft()
        for g in gens:
            image = tuple(g[x] for x in t)
            if image not in seen:
                if image not in targets:
                    return False
                seen.add(image)
                queue.append(image)
    return len(seen) == len(targets)
