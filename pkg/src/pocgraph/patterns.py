"""The forbidden-pattern catalog: small paths, cycles, and the two
7-vertex blockers built from squares.

Delta1 is two 4-cycles sharing one vertex (the degree-4 hub); Delta2 is
Delta1 with one hub edge removed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, cycle_graph, path_graph

DELTA1_EDGES = ((0, 1), (1, 3), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3))
DELTA2_EDGES = tuple(e for e in DELTA1_EDGES if e != (1, 3))


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph
    order: tuple[int, ...]  # embedding search order, connectivity-first


def _search_order(g: Graph) -> tuple[int, ...]:
    """Start at a maximum-degree vertex, then always extend by the unplaced
    vertex with the most placed neighbors (most constrained first)."""
    degs = [g.degree(v) for v in range(g.n)]
    order = [max(range(g.n), key=lambda v: (degs[v], -v))]
    placed = set(order)
    while len(order) < g.n:
        best = None
        best_key = None
        for v in range(g.n):
            if v in placed:
                continue
            links = sum(1 for u in order if g.has_edge(u, v))
            key = (links, degs[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    return tuple(order)


def _pattern(name: str, graph: Graph) -> Pattern:
    return Pattern(name, graph, _search_order(graph))


PATTERNS: dict[str, Pattern] = {
    "P4": _pattern("P4", path_graph(4)),
    "P5": _pattern("P5", path_graph(5)),
    "P7": _pattern("P7", path_graph(7)),
    "C4": _pattern("C4", cycle_graph(4)),
    "C5": _pattern("C5", cycle_graph(5)),
    "C6": _pattern("C6", cycle_graph(6)),
    "C7": _pattern("C7", cycle_graph(7)),
    "Delta1": _pattern("Delta1", Graph.from_edges(7, DELTA1_EDGES)),
    "Delta2": _pattern("Delta2", Graph.from_edges(7, DELTA2_EDGES)),
}


def get_pattern(p: "Pattern | Graph | str") -> Pattern:
    if isinstance(p, Pattern):
        return p
    if isinstance(p, str):
        try:
            return PATTERNS[p]
        except KeyError:
            raise KeyError(f"unknown pattern {p!r}; catalog: {', '.join(PATTERNS)}") from None
    return _pattern("adhoc", p)
