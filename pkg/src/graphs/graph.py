"""
Simple undirected graphs on dense integer vertices.

Adjacency is stored as sorted neighbor tuples. Graphs are immutable once built.
"""

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from math import inf
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence

import networkx as nx

from ..exceptions import (
    Disconnected,
    GraphError,
    GraphFormatError,
    IntraCellEdge,
    LoopEdge,
    NotAPath,
    VertexOutOfRange,
)

EDGE_LIST_HEADER = "p2pg-graph v1"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple graph with per-vertex sorted neighbor tuples."""
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """
        Build from an edge iterable, dropping duplicate edges.

        Raises:
            LoopEdge: if an edge joins a vertex to itself
            VertexOutOfRange: if an endpoint is not in 0..vertex_count-1
        """
        neighbors: list[set[int]] = [set() for _ in range(vertex_count)]
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(n)) for n in neighbors))

    @classmethod
    def from_neighbor_lists(cls, lists: Sequence[Iterable[int]]) -> "Graph":
        """Build from per-vertex neighbor lists, checking symmetry and simplicity."""
        adjacency = tuple(tuple(sorted(int(x) for x in row)) for row in lists)
        n = len(adjacency)
        for u, row in enumerate(adjacency):
            if len(set(row)) != len(row):
                raise GraphError(f"multi-edge at vertex {u}")
            for v in row:
                if v == u:
                    raise LoopEdge(f"loop at vertex {u}")
                if not 0 <= v < n:
                    raise VertexOutOfRange(f"neighbor {v} of {u} outside 0..{n - 1}")
        sets = [set(row) for row in adjacency]
        if any(u not in sets[v] for u in range(n) for v in adjacency[u]):
            raise GraphError("adjacency is not symmetric")
        return cls(n, adjacency)

    # =========================================================================
    # BASIC QUERIES
    # =========================================================================

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def is_regular(self, k: Optional[int] = None) -> bool:
        degrees = set(self.degrees())
        if len(degrees) > 1:
            return False
        return k is None or degrees <= {k}

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges (i, j) with i < j, lexicographically sorted."""
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row]

    def adjacency_sets(self) -> list[frozenset[int]]:
        return [frozenset(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        out = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and len(self.components()) == 1

    def s_arcs_from(self, v: int, s: int) -> list[tuple[int, ...]]:
        """All s-arcs starting at v (no immediate backtracking, revisits allowed)."""
        arcs: list[tuple[int, ...]] = [(v,)]
        for _ in range(s):
            extended = []
            for arc in arcs:
                back = arc[-2] if len(arc) > 1 else None
                for w in self.adjacency[arc[-1]]:
                    if w != back:
                        extended.append(arc + (w,))
            arcs = extended
        return arcs

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    # =========================================================================
    # METRICS
    # =========================================================================

    def girth(self) -> float:
        """Length of a shortest cycle; math.inf for forests."""
        best = inf
        n = self.vertex_count
        for root in range(n):
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                if 2 * dist[x] + 1 >= best:
                    break
                for y in self.adjacency[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        best = min(best, dist[x] + dist[y] + 1)
        return best

    def bipartition(self) -> Optional[tuple[list[int], list[int]]]:
        """
        2-coloring with vertex 0 in the first part, or None if not bipartite.

        Raises:
            Disconnected: if the graph is not connected
        """
        if not self.is_connected():
            raise Disconnected("bipartition requires a connected graph")
        color = [-1] * self.vertex_count
        color[0] = 0
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
        part0 = [v for v in range(self.vertex_count) if color[v] == 0]
        part1 = [v for v in range(self.vertex_count) if color[v] == 1]
        return part0, part1

    def cycles_through_path(self, path: Sequence[int], length: int) -> int:
        """
        Number of cycles of the given length containing ``path`` as a consecutive subpath.

        Raises:
            NotAPath: if consecutive vertices are not adjacent or the path backtracks
        """
        for v in path:
            if not 0 <= v < self.vertex_count:
                raise NotAPath(f"vertex {v} out of range")
        sets = self.adjacency_sets()
        return count_cycles_through_path(lambda v: self.adjacency[v], path, length,
                                         adjacent=lambda u, v: v in sets[u])

    # =========================================================================
    # DERIVED GRAPHS
    # =========================================================================

    def quotient(self, partition: Sequence[Sequence[int]]) -> "Graph":
        """
        Graph on the cells, adjacent iff some edge crosses between them.

        Raises:
            IntraCellEdge: if a cell contains an edge
        """
        cell_of = [-1] * self.vertex_count
        for i, cell in enumerate(partition):
            for v in cell:
                if cell_of[v] != -1:
                    raise GraphError(f"vertex {v} appears in two cells")
                cell_of[v] = i
        if -1 in cell_of:
            raise GraphError("partition does not cover every vertex")
        edges = set()
        for u, v in self.edges():
            cu, cv = cell_of[u], cell_of[v]
            if cu == cv:
                raise IntraCellEdge(f"edge ({u}, {v}) inside cell {cu}")
            edges.add((min(cu, cv), max(cu, cv)))
        return Graph.build(len(partition), sorted(edges))

    def complement(self) -> "Graph":
        sets = self.adjacency_sets()
        n = self.vertex_count
        return Graph.build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if v not in sets[u]])

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Image graph under the vertex bijection ``v -> mapping[v]``."""
        return Graph.build(self.vertex_count, [(mapping[u], mapping[v]) for u, v in self.edges()])

    def is_automorphism(self, images: Sequence[int]) -> bool:
        sets = self.adjacency_sets()
        return all(images[v] in sets[images[u]] for u, v in self.edges())

    # =========================================================================
    # INTEROP AND TEXT FORMAT
    # =========================================================================

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    def to_edge_list_text(self) -> str:
        lines = [EDGE_LIST_HEADER, f"{self.vertex_count} {self.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list text format.

    Raises:
        GraphFormatError: on a bad header, bad counts or malformed lines
    """
    lines = [line.strip() for line in text.strip().splitlines()]
    if not lines or lines[0] != EDGE_LIST_HEADER:
        raise GraphFormatError(f"expected header {EDGE_LIST_HEADER!r}")
    try:
        n, m = (int(x) for x in lines[1].split())
        edges = [tuple(int(x) for x in line.split()) for line in lines[2:] if line]
    except (IndexError, ValueError) as e:
        raise GraphFormatError(f"malformed edge list: {e}") from e
    if any(len(e) != 2 for e in edges):
        raise GraphFormatError("each edge line needs two vertices")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph.build(n, edges)


def count_cycles_through_path(
    neighbors: Callable[[Hashable], Iterable[Hashable]],
    path: Sequence[Hashable],
    length: int,
    adjacent: Optional[Callable[[Hashable, Hashable], bool]] = None,
) -> int:
    """
    Count cycles of a given length through a path, on any neighbor function.

    Works on implicit graphs (e.g. Cayley graphs given by a neighbor rule)
    without materializing them.
    """
    if adjacent is None:
        adjacent = lambda u, v: v in set(neighbors(u))  # noqa: E731
    for i in range(len(path) - 1):
        if not adjacent(path[i], path[i + 1]):
            raise NotAPath(f"{path[i]} and {path[i + 1]} are not adjacent")
    for i in range(1, len(path) - 1):
        if path[i - 1] == path[i + 1]:
            raise NotAPath(f"path backtracks at position {i}")
    k = len(path) - 1
    if len(set(path)) != len(path) or length < 3 or k >= length:
        return 0

    head, tail = path[0], path[-1]
    used = set(path)
    remaining = length - k

    def extend(v: Hashable, steps_left: int) -> int:
        if steps_left == 1:
            return 1 if adjacent(v, head) else 0
        total = 0
        for w in neighbors(v):
            if w in used:
                continue
            used.add(w)
            total += extend(w, steps_left - 1)
            used.discard(w)
        return total

    return extend(tail, remaining)


def cycle_graph(n: int) -> Graph:
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.vertex_count
    return Graph.build(offset, edges)


def iter_two_regular_graphs(n: int) -> Iterator[Graph]:
    """One 2-regular graph per cycle-length partition of n (parts >= 3)."""
    def partitions(total: int, smallest: int) -> Iterator[list[int]]:
        if total == 0:
            yield []
            return
        for part in range(smallest, total + 1):
            for rest in partitions(total - part, part):
                yield [part] + rest

    for parts in partitions(n, 3):
        yield disjoint_union([cycle_graph(k) for k in sorted(parts, reverse=True)])
