"""
Graph automorphisms and isomorphism by partition refinement.

Ordered partitions are refined to equitable ones against the neighbor counts
of splitter cells; a vertex of the smallest non-singleton cell is
individualized and the search backtracks over the choices. Every refinement
step is recorded in a trace, and branches whose trace departs from the first
path are cut.

The first path's individualized vertices form a base. Candidates at each level
are processed deepest level first, and a candidate already in the orbit of the
base point (under automorphisms found so far) is skipped, so the generators
found form a strong generating set relative to that base.
"""

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..exceptions import TooLarge
from ..graphs import Graph
from ..groups import Perm, PermGroup
from ..log import get_logger
from .. import config

logger = get_logger(__name__)

Trace = list[tuple]


class _Partition:
    """Ordered partition: cells are contiguous runs of ``order`` keyed by start position."""

    __slots__ = ('order', 'pos', 'start', 'length')

    def __init__(self, order: list[int], pos: list[int], start: list[int], length: dict[int, int]):
        self.order = order
        self.pos = pos
        self.start = start
        self.length = length

    @classmethod
    def unit(cls, n: int) -> "_Partition":
        return cls(list(range(n)), list(range(n)), [0] * n, {0: n} if n else {})

    def copy(self) -> "_Partition":
        return _Partition(self.order[:], self.pos[:], self.start[:], dict(self.length))

    def is_discrete(self) -> bool:
        return len(self.length) == len(self.order)

    def cell(self, start: int) -> list[int]:
        return self.order[start:start + self.length[start]]

    def target_cell(self) -> int:
        """Start of the smallest non-singleton cell (lowest start on ties)."""
        return min((size, c) for c, size in self.length.items() if size > 1)[1]

    def individualize(self, v: int) -> tuple["_Partition", int]:
        """Copy with v split off as a singleton at the front of its cell."""
        p = self.copy()
        c = p.start[v]
        size = p.length[c]
        pv, z = p.pos[v], p.order[c]
        p.order[c], p.order[pv] = v, z
        p.pos[v], p.pos[z] = c, pv
        p.length[c] = 1
        p.length[c + 1] = size - 1
        for y in p.order[c + 1:c + size]:
            p.start[y] = c + 1
        return p, c


def _refine(adj: Sequence[Sequence[int]], part: _Partition, splitters: Sequence[int],
            expected: Optional[Trace] = None) -> Optional[Trace]:
    """
    Refine ``part`` in place to the coarsest equitable refinement.

    Returns the trace, or None as soon as it departs from ``expected``.
    """
    order, pos, start, length = part.order, part.pos, part.start, part.length
    n = len(order)
    trace: Trace = []
    queue = deque(splitters)
    queued = set(splitters)
    while queue and len(length) < n:
        s = queue.popleft()
        queued.discard(s)
        counts: dict[int, int] = {}
        for x in order[s:s + length[s]]:
            for y in adj[x]:
                counts[y] = counts.get(y, 0) + 1
        touched: dict[int, list[int]] = {}
        for y in counts:
            c = start[y]
            if length[c] > 1:
                touched.setdefault(c, []).append(y)

        for c in sorted(touched):
            members = touched[c]
            size = length[c]
            if len(members) == size:
                first = counts[members[0]]
                if all(counts[y] == first for y in members):
                    continue
            end = c + size
            for y in members:
                end -= 1
                py, z = pos[y], order[end]
                order[py], pos[z] = z, py
                order[end], pos[y] = y, end
            members.sort(key=lambda y: (counts[y], y))
            for i, y in enumerate(members):
                order[end + i] = y
                pos[y] = end + i

            parts: list[tuple[int, int, int]] = []
            if end > c:
                parts.append((c, end - c, 0))
            i = end
            while i < c + size:
                k = counts[order[i]]
                j = i
                while j < c + size and counts[order[j]] == k:
                    j += 1
                parts.append((i, j - i, k))
                i = j
            for st, sz, _ in parts:
                length[st] = sz
            for st, sz, _ in parts[1:]:
                for y in order[st:st + sz]:
                    start[y] = st

            entry = (s, c, tuple((k, sz) for _, sz, k in parts))
            if expected is not None:
                index = len(trace)
                if index >= len(expected) or expected[index] != entry:
                    return None
            trace.append(entry)

            if c in queued:
                new = [st for st, _, _ in parts[1:]]
            else:
                largest = max(range(len(parts)), key=lambda t: (parts[t][1], -t))
                new = [st for t, (st, _, _) in enumerate(parts) if t != largest]
            for st in new:
                queue.append(st)
                queued.add(st)

    if expected is not None and len(trace) != len(expected):
        return None
    return trace


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def add_permutation(self, images: Sequence[int]) -> None:
        for x, y in enumerate(images):
            a, b = self.find(x), self.find(y)
            if a != b:
                self.parent[max(a, b)] = min(a, b)


@dataclass
class _Path:
    """First path of the search tree: partitions, base points and traces."""
    root_trace: Trace
    nodes: list[_Partition]
    base: list[int]
    traces: list[Trace]

    @property
    def leaf(self) -> _Partition:
        return self.nodes[-1]


class _Search:
    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.vertex_count
        self.adj = graph.adjacency
        degrees = {len(row) for row in self.adj}
        self._matrix = np.array(self.adj, dtype=np.int64) if len(degrees) == 1 and self.n else None
        self._sets = None

    def root(self, expected: Optional[Trace] = None) -> tuple[_Partition, Optional[Trace]]:
        part = _Partition.unit(self.n)
        trace = _refine(self.adj, part, [0] if self.n else [], expected)
        return part, trace

    def first_path(self) -> _Path:
        part, trace = self.root()
        path = _Path(trace, [part], [], [])
        while not part.is_discrete():
            c = part.target_cell()
            v = min(part.cell(c))
            part, s = part.individualize(v)
            path.traces.append(_refine(self.adj, part, [s]))
            path.nodes.append(part)
            path.base.append(v)
        return path

    def images(self, leaf_from: _Partition, leaf_to: _Partition) -> np.ndarray:
        images = np.empty(self.n, dtype=np.int64)
        images[np.array(leaf_from.order, dtype=np.int64)] = np.array(leaf_to.order, dtype=np.int64)
        return images

    def preserves_edges(self, images: np.ndarray) -> bool:
        if self._matrix is not None:
            mapped = np.sort(images[self._matrix], axis=1)
            return bool(np.array_equal(mapped, self._matrix[images]))
        if self._sets is None:
            self._sets = self.graph.adjacency_sets()
        return all(int(images[v]) in self._sets[int(images[u])] for u, v in self.graph.edges())

    def dive(self, part: _Partition, depth: int, path: _Path, accept) -> Optional[np.ndarray]:
        """Depth-first search below ``part`` for a leaf accepted by ``accept``."""
        if depth == len(path.base):
            return accept(part)
        c = path.nodes[depth].target_cell()
        for x in sorted(part.cell(c)):
            child, s = part.individualize(x)
            if _refine(self.adj, child, [s], path.traces[depth]) is None:
                continue
            found = self.dive(child, depth + 1, path, accept)
            if found is not None:
                return found
        return None


def _check_size(graph: Graph, max_vertices: Optional[int], default: int) -> None:
    limit = default if max_vertices is None else max_vertices
    if graph.vertex_count > limit:
        raise TooLarge(f"{graph.vertex_count} vertices exceeds the search guard of {limit}")


def _automorphism_search(search: _Search) -> tuple[_Path, list[Perm]]:
    path = search.first_path()
    n = search.n
    generators: list[Perm] = []
    orbits = _UnionFind(n)

    def accept(leaf: _Partition) -> Optional[np.ndarray]:
        images = search.images(path.leaf, leaf)
        return images if search.preserves_edges(images) else None

    for level in range(len(path.base) - 1, -1, -1):
        node = path.nodes[level]
        b = path.base[level]
        rejected: list[int] = []
        for w in sorted(node.cell(node.target_cell())):
            root = orbits.find(w)
            if root == orbits.find(b) or any(root == orbits.find(r) for r in rejected):
                continue
            child, s = node.individualize(w)
            found = None
            if _refine(search.adj, child, [s], path.traces[level]) is not None:
                found = search.dive(child, level + 1, path, accept)
            if found is None:
                rejected.append(w)
                continue
            g = Perm(found, check=False)
            generators.append(g)
            orbits.add_permutation(found.tolist())
        logger.debug(f"[*] level {level}: {len(generators)} generator(s) so far")
    return path, generators


def aut_group(graph: Graph, max_vertices: Optional[int] = None) -> PermGroup:
    """
    The full automorphism group, with a certified base and strong generating set.

    Args:
        graph: the graph
        max_vertices: override for the AUT_MAX_VERTICES guard

    Raises:
        TooLarge: if the graph has more vertices than the guard allows
    """
    _check_size(graph, max_vertices, config.AUT_MAX_VERTICES)
    if graph.vertex_count <= 1:
        return PermGroup(graph.vertex_count, [])
    path, generators = _automorphism_search(_Search(graph))
    group = PermGroup.from_strong_generators(graph.vertex_count, path.base, generators)
    logger.debug(f"[+] |Aut| = {group.order()} on {graph.vertex_count} vertices")
    return group


def isomorphic(g1: Graph, g2: Graph, max_vertices: Optional[int] = None) -> Optional[list[int]]:
    """
    A vertex bijection f with u ~ v in g1 iff f(u) ~ f(v) in g2, or None.

    The first-path leaf of g1 is matched against the search tree of g2. Where
    the branch still follows g2's own first path, only one candidate per orbit
    of the corresponding stabilizer in Aut(g2) is tried.

    Raises:
        TooLarge: if either graph exceeds the guard
    """
    _check_size(g1, max_vertices, config.ISO_MAX_VERTICES)
    _check_size(g2, max_vertices, config.ISO_MAX_VERTICES)
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    if g1.vertex_count == 0:
        return []
    if g1.vertex_count == 1:
        return [0]

    s1, s2 = _Search(g1), _Search(g2)
    path1 = s1.first_path()
    root2, trace = s2.root(path1.root_trace)
    if trace is None:
        return None
    path2, generators2 = _automorphism_search(s2)
    edges1 = g1.edges()
    sets2 = g2.adjacency_sets()

    def accept(leaf: _Partition) -> Optional[np.ndarray]:
        images = s1.images(path1.leaf, leaf)
        if all(int(images[v]) in sets2[int(images[u])] for u, v in edges1):
            return images
        return None

    def candidates(part: _Partition, depth: int, prefix: list[int]) -> list[int]:
        cell = sorted(part.cell(path1.nodes[depth].target_cell()))
        if prefix != path2.base[:depth]:
            return cell
        stabilizer = [g for g in generators2 if all(g.fixes(b) for b in prefix)]
        orbits = _UnionFind(s2.n)
        for g in stabilizer:
            orbits.add_permutation(g.to_list())
        seen = set()
        chosen = []
        for x in cell:
            r = orbits.find(x)
            if r not in seen:
                seen.add(r)
                chosen.append(x)
        return chosen

    def search(part: _Partition, depth: int, prefix: list[int]) -> Optional[np.ndarray]:
        if depth == len(path1.base):
            return accept(part)
        for x in candidates(part, depth, prefix):
            child, s = part.individualize(x)
            if _refine(s2.adj, child, [s], path1.traces[depth]) is None:
                continue
            found = search(child, depth + 1, prefix + [x])
            if found is not None:
                return found
        return None

    found = search(root2, 0, [])
    return None if found is None else [int(x) for x in found]

