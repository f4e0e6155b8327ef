"""Hereditary-class recognition, special trees, and criticality.

Classification is by forbidden induced subgraphs: a graph lands in the
most restrictive class whose forbidden set does not embed, with the
blocking embedding attached as a witness when one exists.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import kernels, solver
from .graph import Graph, VertexSet, iter_bits
from .patterns import PATTERNS, Pattern, get_pattern


# -- induced-pattern search ---------------------------------------------------

def contains_induced(g: Graph, pattern: "Pattern | Graph | str") -> Optional[tuple[int, ...]]:
    """Injective vertex map embedding the pattern as an induced subgraph,
    or None.  Entry i of the map hosts pattern vertex i."""
    p = get_pattern(pattern)
    if p.graph.n > g.n:
        return None
    return kernels.induced_embedding(g.rows, g.n, p.graph.rows, p.graph.n, p.order)


def _first_hit(g: Graph, names: Iterable[str]) -> Optional["PatternHit"]:
    for name in names:
        emb = contains_induced(g, name)
        if emb is not None:
            return PatternHit(name, emb)
    return None


# -- chordality ---------------------------------------------------------------

@dataclass(frozen=True)
class Chordality:
    chordal: bool
    elimination_order: Optional[tuple[int, ...]]  # perfect elimination order
    chordless_cycle: Optional[tuple[int, ...]]    # induced cycle of length >= 4


def _lexbfs_order(g: Graph) -> list[int]:
    sequence: list[list[int]] = [list(range(g.n))]
    order: list[int] = []
    while sequence:
        cls = sequence[0]
        v = cls.pop(0)
        if not cls:
            sequence.pop(0)
        order.append(v)
        row = g.rows[v]
        nxt: list[list[int]] = []
        for c in sequence:
            inside = [x for x in c if row >> x & 1]
            outside = [x for x in c if not row >> x & 1]
            if inside:
                nxt.append(inside)
            if outside:
                nxt.append(outside)
        sequence = nxt
    return order


def _find_chordless_cycle(g: Graph) -> tuple[int, ...]:
    """Some induced cycle of length >= 4; the graph must not be chordal.

    For consecutive u,v,w on an induced cycle, u and w are non-adjacent
    neighbors of v and the rest of the cycle avoids N[v], so scanning all
    such triples and taking a shortest u-w path outside N[v] must succeed.
    """
    for v in range(g.n):
        nbs = g.neighbors(v)
        for i, u in enumerate(nbs):
            for w in nbs[i + 1:]:
                if g.has_edge(u, w):
                    continue
                allowed = g.full_mask() & ~g.rows[v] & ~(1 << v) | (1 << u) | (1 << w)
                # BFS from u to w inside allowed
                parent = {u: -1}
                queue = [u]
                while queue:
                    x = queue.pop(0)
                    if x == w:
                        break
                    for y in iter_bits(g.rows[x] & allowed):
                        if y not in parent:
                            parent[y] = x
                            queue.append(y)
                if w not in parent:
                    continue
                path = []
                x = w
                while x != -1:
                    path.append(x)
                    x = parent[x]
                cycle = tuple(path) + (v,)
                assert _is_induced_cycle(g, cycle)
                return cycle
    raise AssertionError("no chordless cycle found in a non-chordal graph")


def _is_induced_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def is_chordal(g: Graph) -> Chordality:
    """Lexicographic BFS; its reverse order is verified as a perfect
    elimination order, otherwise a chordless cycle is produced."""
    order = _lexbfs_order(g)
    peo = list(reversed(order))
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    for v in peo:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=lambda u: pos[u])
        for u in later:
            if u != first and not g.has_edge(first, u):
                return Chordality(False, None, _find_chordless_cycle(g))
    return Chordality(True, tuple(peo), None)


# -- class labels ---------------------------------------------------------------

class PocClass(enum.Enum):
    POC_PERFECT = "PocPerfect"
    NEAR_PERFECT_4_3 = "PocNearPerfect43"
    NEAR_PERFECT_3_2 = "PocNearPerfect32"
    UNBOUNDED = "Unbounded"


THRESHOLDS: dict[PocClass, Optional[Fraction]] = {
    PocClass.POC_PERFECT: Fraction(1),
    PocClass.NEAR_PERFECT_4_3: Fraction(4, 3),
    PocClass.NEAR_PERFECT_3_2: Fraction(3, 2),
    PocClass.UNBOUNDED: None,
}

FORBIDDEN_SETS: dict[PocClass, tuple[str, ...]] = {
    PocClass.POC_PERFECT: ("P5", "C5", "C4"),
    PocClass.NEAR_PERFECT_4_3: ("P5", "C4"),
    PocClass.NEAR_PERFECT_3_2: ("P7", "C6", "Delta1", "Delta2"),
}


@dataclass(frozen=True)
class PatternHit:
    pattern: str
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class ClassLabel:
    label: PocClass
    witness: Optional[PatternHit]


def classify(g: Graph) -> ClassLabel:
    """Most restrictive hereditary class whose forbidden set is absent.

    Test order: {P5,C5,C4}, then {P5,C4}, then {P7,C6,Delta1,Delta2}.
    The witness is the embedding that blocked the next more restrictive
    class (the graph itself may be the witness)."""
    hit1 = _first_hit(g, FORBIDDEN_SETS[PocClass.POC_PERFECT])
    if hit1 is None:
        return ClassLabel(PocClass.POC_PERFECT, None)
    hit2 = _first_hit(g, FORBIDDEN_SETS[PocClass.NEAR_PERFECT_4_3])
    if hit2 is None:
        return ClassLabel(PocClass.NEAR_PERFECT_4_3, hit1)
    hit3 = _first_hit(g, FORBIDDEN_SETS[PocClass.NEAR_PERFECT_3_2])
    if hit3 is None:
        return ClassLabel(PocClass.NEAR_PERFECT_3_2, hit2)
    return ClassLabel(PocClass.UNBOUNDED, hit3)


# -- special trees --------------------------------------------------------------

@dataclass(frozen=True)
class SpecialTreeRecognition:
    base: Optional[Graph]
    reason: Optional[str]  # first violated condition when base is None

    @property
    def ok(self) -> bool:
        return self.base is not None


def build_special_tree(base: Graph) -> Graph:
    """Subdivide every edge of the base tree once, then attach one pendant
    to every leaf of the subdivided tree (= every leaf of the base).

    Labels: base vertices first, then subdivision vertices in base-edge
    order, then pendants in leaf order."""
    if not base.is_tree():
        raise ValueError("the base must be a tree")
    if base.m == 0:
        raise ValueError("the base tree needs at least one edge")
    nb = base.n
    base_edges = base.edges()
    leaves = [v for v in range(nb) if base.degree(v) == 1]
    total = nb + len(base_edges) + len(leaves)
    edges = []
    for i, (u, v) in enumerate(base_edges):
        s = nb + i
        edges.append((u, s))
        edges.append((s, v))
    for j, leaf in enumerate(leaves):
        edges.append((leaf, nb + len(base_edges) + j))
    return Graph.from_edges(total, edges)


def is_special_tree(g: Graph) -> SpecialTreeRecognition:
    """Invert the special-tree construction, or report the first violated
    condition.

    Strip all degree-1 vertices; the rest must 2-color so that every
    leaf of the stripped tree lands in one class X, every other-class
    vertex has degree exactly 2 (the subdivision vertices), stripped
    leaves carried exactly one pendant and internal vertices none;
    contracting the degree-2 class recovers the base tree."""
    if not g.is_tree():
        return SpecialTreeRecognition(None, "not a tree")
    pend = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            pend |= 1 << v
    core = g.full_mask() & ~pend
    if core == 0:
        return SpecialTreeRecognition(None, "nothing remains after removing pendant vertices")
    t, old = g.induced_subgraph(VertexSet(g.n, core))
    colors = t.bipartition().coloring
    assert colors is not None  # trees are bipartite
    leaves_t = [v for v in range(t.n) if t.degree(v) <= 1]
    leaf_colors = {colors[v] for v in leaves_t}
    if len(leaf_colors) != 1:
        return SpecialTreeRecognition(
            None, "leaves of the pendant-stripped tree fall in both color classes")
    x_color = leaf_colors.pop()
    xs = [v for v in range(t.n) if colors[v] == x_color]
    ys = [v for v in range(t.n) if colors[v] != x_color]
    for y in ys:
        if t.degree(y) != 2:
            return SpecialTreeRecognition(
                None, "a subdivision-class vertex has degree other than 2")
    for v in range(t.n):
        pendants = g.degree(old[v]) - t.degree(v)
        if t.degree(v) <= 1:
            if pendants != 1:
                return SpecialTreeRecognition(
                    None, "a leaf of the stripped tree does not carry exactly one pendant")
        elif pendants != 0:
            return SpecialTreeRecognition(
                None, "an internal vertex of the stripped tree carries a pendant")
    if len(xs) < 2:
        return SpecialTreeRecognition(None, "base tree would have no edge")
    index = {v: i for i, v in enumerate(xs)}
    base_edges = []
    for y in ys:
        a, b = t.neighbors(y)
        base_edges.append((index[a], index[b]))
    base = Graph.from_edges(len(xs), base_edges)
    if not base.is_tree():  # cannot happen for a tree input; defensive
        return SpecialTreeRecognition(None, "contracted base is not a tree")
    return SpecialTreeRecognition(base, None)


# -- criticality -----------------------------------------------------------------

def _check_critical_preconditions(g: Graph) -> None:
    if g.m == 0:
        raise ValueError("criticality needs at least one edge")
    if g.n < 3:
        # only K2: no proper induced subgraph has an edge, the comparison is vacuous
        raise ValueError("criticality is undefined when no proper induced subgraph has an edge")


def _mask_connected(g: Graph, mask: int) -> bool:
    start = (mask & -mask).bit_length() - 1
    return g._component_mask(start, mask) == mask


def is_critical(g: Graph, size_cap: int = 12) -> bool:
    """poc(H) < poc(g) for every proper induced subgraph H with an edge.

    Only connected vertex subsets are scanned: a disconnected subgraph's
    ratio is a mediant of its components' ratios, hence never exceeds
    their maximum, and each component is itself a proper induced subgraph.
    """
    _check_critical_preconditions(g)
    if g.n > size_cap:
        raise ValueError(f"n={g.n} exceeds the criticality size cap of {size_cap}")
    target = solver.poc(g)
    full = g.full_mask()
    for mask in range(1, full):
        if mask.bit_count() < 2 or not _mask_connected(g, mask):
            continue
        sub, _ = g.induced_subgraph(VertexSet(g.n, mask))
        if sub.m == 0:
            continue
        tau, tauc = solver.tau_tauc(sub)
        if Fraction(tauc, tau) >= target:
            return False
    return True


def _delete_edge_span(h: Graph, u: int, v: int) -> Optional[Graph]:
    """h minus the edge uv, with isolated vertices dropped; None if edgeless."""
    rows = list(h.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    keep = [w for w in range(h.n) if rows[w]]
    if not keep:
        return None
    index = {w: i for i, w in enumerate(keep)}
    new_rows = [0] * len(keep)
    for i, w in enumerate(keep):
        for x in iter_bits(rows[w]):
            new_rows[i] |= 1 << index[x]
    return Graph._raw(len(keep), tuple(new_rows))


def is_strongly_critical(g: Graph, size_cap: int = 10) -> bool:
    """poc(H) < poc(g) for every proper subgraph H with an edge, where
    deletions may remove vertices and/or edges.

    Isolated vertices never change the ratio, so proper subgraphs are
    explored as edge subsets via recursive single-edge deletion with
    canonical-form memoization.  Induced subgraphs are proper subgraphs,
    so the induced sweep runs first as a fast filter.
    """
    _check_critical_preconditions(g)
    if g.n > size_cap:
        raise ValueError(f"n={g.n} exceeds the strong-criticality size cap of {size_cap}")
    if not is_critical(g, size_cap=max(size_cap, g.n)):
        return False
    target = solver.poc(g)
    visited: set = set()

    def rec(h: Graph) -> bool:
        for u, v in h.edges():
            child = _delete_edge_span(h, u, v)
            if child is None:
                continue
            key = solver._memo_key(child)
            if key in visited:
                continue
            visited.add(key)
            tau, tauc = solver.tau_tauc(child)
            if Fraction(tauc, tau) >= target:
                return False
            if not rec(child):
                return False
        return True

    return rec(g)
