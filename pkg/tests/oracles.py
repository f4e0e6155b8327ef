"""Independent brute-force oracles for the test suite.

Everything here works by exhaustive subset/permutation search straight
from the definitions, deliberately ignoring the library's search
strategies, so expected values are computed on a second path.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from pocgraph.graph import Graph


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def is_cover(g: Graph, mask: int) -> bool:
    return all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges())


def mask_connected(g: Graph, mask: int) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            nxt |= g.rows[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def brute_tau(g: Graph) -> int:
    for k in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            if is_cover(g, mask_of(sub)):
                return k
    raise AssertionError


def brute_all_min_covers(g: Graph) -> list[int]:
    tau = brute_tau(g)
    return sorted(mask_of(sub) for sub in itertools.combinations(range(g.n), tau)
                  if is_cover(g, mask_of(sub)))


def brute_tauc_connected(g: Graph) -> tuple[int, int]:
    """(tau_c, lexicographically smallest witness mask) of a connected graph
    with at least one edge."""
    assert g.m >= 1
    for k in range(1, g.n + 1):
        best = None
        for sub in itertools.combinations(range(g.n), k):
            mask = mask_of(sub)
            if is_cover(g, mask) and mask_connected(g, mask):
                if best is None or mask < best:
                    best = mask
        if best is not None:
            return k, best
    raise AssertionError


def brute_tauc(g: Graph) -> int:
    """tau_c with the per-component convention; edgeless components add 0."""
    total = 0
    for comp in g.connected_components():
        sub, _ = g.induced_subgraph(comp)
        if sub.m == 0:
            continue
        total += brute_tauc_connected(sub)[0]
    return total


def brute_poc(g: Graph) -> Fraction:
    assert g.m >= 1
    return Fraction(brute_tauc(g), brute_tau(g))


def brute_has_induced(host: Graph, pat: Graph) -> bool:
    if pat.n > host.n:
        return False
    for sub in itertools.combinations(range(host.n), pat.n):
        for perm in itertools.permutations(sub):
            if all(pat.has_edge(i, j) == host.has_edge(perm[i], perm[j])
                   for i in range(pat.n) for j in range(i + 1, pat.n)):
                return True
    return False


def brute_distance(g: Graph, a, b):
    """Multi-source BFS distance between vertex sets; None if unreachable."""
    a = set(a)
    b = set(b)
    if a & b:
        return 0
    dist = {v: 0 for v in a}
    queue = sorted(a)
    while queue:
        v = queue.pop(0)
        for u in g.neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                if u in b:
                    return dist[u]
                queue.append(u)
    return None


def brute_bridges(g: Graph) -> list[tuple[int, int]]:
    """An edge is a bridge iff deleting it splits its component."""
    out = []
    for u, v in g.edges():
        rows = list(g.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        h = Graph(g.n, rows)
        comp = next(c for c in g.connected_components() if u in c)
        start_mask = 1 << u
        seen = start_mask
        frontier = seen
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                x = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                nxt |= h.rows[x]
            nxt &= comp.mask & ~seen
            seen |= nxt
            frontier = nxt
        if seen != comp.mask:
            out.append((u, v))
    return out


def brute_cutvertices(g: Graph) -> set[int]:
    base = len(g.connected_components())
    out = set()
    for v in range(g.n):
        if g.n == 1:
            break
        keep = [u for u in range(g.n) if u != v]
        sub, _ = g.induced_subgraph(keep)
        if len(sub.connected_components()) > base - (1 if g.degree(v) == 0 else 0):
            out.add(v)
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus random extra edges."""
    rows = [0] * n
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)
