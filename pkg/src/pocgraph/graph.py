"""Immutable simple undirected graphs with bit-row adjacency.

Vertices are dense integers 0..n-1.  Row v is an int whose bit u is set
iff uv is an edge, so every structural query below is a handful of
bitwise operations.  Graphs and vertex sets are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

DEFAULT_MAX_VERTICES = 512

_max_vertices = int(os.environ.get("POCGRAPH_MAX_VERTICES", DEFAULT_MAX_VERTICES))


def max_vertices() -> int:
    """Current vertex-count cap for graph construction."""
    return _max_vertices


def set_max_vertices(cap: int) -> None:
    global _max_vertices
    if cap < 1:
        raise ValueError("vertex cap must be positive")
    _max_vertices = cap


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """A subset of the vertices 0..n-1 of some fixed graph, as a bitmask."""

    __slots__ = ("n", "mask", "_size")

    def __init__(self, n: int, mask: int):
        if mask < 0 or mask >> n:
            raise ValueError(f"vertex set {bin(mask)} has members >= n={n}")
        self.n = n
        self.mask = mask
        self._size = mask.bit_count()

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    def vertices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self._size

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, VertexSet)
                and self.n == other.n and self.mask == other.mask)

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return "VertexSet({" + ", ".join(map(str, self)) + "})"


class Graph:
    """Immutable simple undirected graph; adjacency as symmetric bit rows."""

    __slots__ = ("n", "rows", "m", "_hash")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if n < 1:
            raise ValueError("graphs need at least one vertex")
        if n > _max_vertices:
            raise ValueError(f"n={n} exceeds the configured cap of {_max_vertices}")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        deg_sum = 0
        for v, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            deg_sum += row.bit_count()
        for v, row in enumerate(rows):
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        self.n = n
        self.rows = rows
        self.m = deg_sum // 2
        self._hash = hash((n, rows))

    @classmethod
    def _raw(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Construct without validation.  Caller guarantees the invariants."""
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g.m = sum(r.bit_count() for r in rows) // 2
        g._hash = hash((n, rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse silently."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) is not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, sorted ascending."""
        out = []
        for u in range(self.n):
            high = self.rows[u] >> (u + 1)
            for d in iter_bits(high):
                out.append((u, u + 1 + d))
        return out

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- connectivity -----------------------------------------------------

    def _component_mask(self, start: int, within: int) -> int:
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.rows[v]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def connected_components(self) -> list[VertexSet]:
        """Partition of V into components, ordered by smallest member."""
        remaining = self.full_mask()
        parts = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            comp = self._component_mask(start, remaining)
            parts.append(VertexSet(self.n, comp))
            remaining &= ~comp
        return parts

    def is_connected(self) -> bool:
        return self._component_mask(0, self.full_mask()) == self.full_mask()

    def induced_subgraph(self, s: "VertexSet | Iterable[int]") -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``s`` plus the new-index -> old-vertex map.

        Vertices of the result are ``s`` relabeled 0..|s|-1 in ascending
        original order.
        """
        mask = s.mask if isinstance(s, VertexSet) else VertexSet.of(self.n, s).mask
        if mask == 0:
            raise ValueError("induced subgraph of the empty vertex set")
        old = tuple(iter_bits(mask))
        index = {v: i for i, v in enumerate(old)}
        rows = [0] * len(old)
        for i, v in enumerate(old):
            for u in iter_bits(self.rows[v] & mask):
                rows[i] |= 1 << index[u]
        return Graph._raw(len(old), tuple(rows)), old

    def distance(self, a: "VertexSet | Iterable[int]", b: "VertexSet | Iterable[int]") -> Optional[int]:
        """Shortest hop count between the sets, 0 if they meet, None if unreachable."""
        am = a.mask if isinstance(a, VertexSet) else VertexSet.of(self.n, a).mask
        bm = b.mask if isinstance(b, VertexSet) else VertexSet.of(self.n, b).mask
        if am == 0 or bm == 0:
            raise ValueError("distance between empty vertex sets is undefined")
        if am & bm:
            return 0
        seen = am
        frontier = am
        dist = 0
        while frontier:
            dist += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.rows[v]
            nxt &= ~seen
            if nxt & bm:
                return dist
            seen |= nxt
            frontier = nxt
        return None

    # -- one-pass DFS structure: bridges and cutvertices -------------------

    def _dfs_low(self) -> tuple[list[tuple[int, int]], int]:
        """Iterative DFS computing bridges and a cutvertex mask."""
        n = self.n
        disc = [-1] * n
        low = [0] * n
        parent = [-1] * n
        bridges: list[tuple[int, int]] = []
        cut = 0
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            root_children = 0
            stack = [(root, iter(self.neighbors(root)))]
            disc[root] = low[root] = timer
            timer += 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for u in it:
                    if disc[u] == -1:
                        parent[u] = v
                        if v == root:
                            root_children += 1
                        disc[u] = low[u] = timer
                        timer += 1
                        stack.append((u, iter(self.neighbors(u))))
                        advanced = True
                        break
                    elif u != parent[v]:
                        if disc[u] < low[v]:
                            low[v] = disc[u]
                if not advanced:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        if low[v] < low[p]:
                            low[p] = low[v]
                        if low[v] > disc[p]:
                            bridges.append((min(p, v), max(p, v)))
                        if p != root and low[v] >= disc[p]:
                            cut |= 1 << p
            if root_children >= 2:
                cut |= 1 << root
        bridges.sort()
        return bridges, cut

    def bridges(self) -> list[tuple[int, int]]:
        return self._dfs_low()[0]

    def cutvertices(self) -> VertexSet:
        return VertexSet(self.n, self._dfs_low()[1])

    # -- bipartiteness ------------------------------------------------------

    def bipartition(self) -> "Bipartiteness":
        """2-coloring if bipartite, otherwise an odd closed walk."""
        color = [-1] * self.n
        parent = [-1] * self.n
        for root in range(self.n):
            if color[root] != -1:
                continue
            color[root] = 0
            queue = [root]
            while queue:
                v = queue.pop(0)
                for u in iter_bits(self.rows[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        parent[u] = v
                        queue.append(u)
                    elif color[u] == color[v]:
                        walk_v = []
                        x = v
                        while x != -1:
                            walk_v.append(x)
                            x = parent[x]
                        walk_u = []
                        x = u
                        while x != -1:
                            walk_u.append(x)
                            x = parent[x]
                        # root..v, then the conflict edge vu, then u..root:
                        # depths of u and v share parity, so the step count is odd
                        walk = list(reversed(walk_v)) + walk_u
                        return Bipartiteness(False, None, tuple(walk))
        return Bipartiteness(True, tuple(color), None)

    def is_bipartite(self) -> bool:
        return self.bipartition().bipartite

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1


@dataclass(frozen=True)
class Bipartiteness:
    bipartite: bool
    coloring: Optional[tuple[int, ...]]
    odd_closed_walk: Optional[tuple[int, ...]]


# -- small named builders ---------------------------------------------------

def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(k: int) -> Graph:
    return Graph(k, [0] * k)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    rows = list(a.rows) + [row << a.n for row in b.rows]
    return Graph._raw(a.n + b.n, tuple(rows))
