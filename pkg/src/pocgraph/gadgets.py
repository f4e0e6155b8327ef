"""Ratio-forcing reduction gadgets with their predicted cover numbers.

Every construction returns its closed-form tau/tau_c predictions as
data; nothing is trusted until the verify step compares the predictions
against the exact solver.  Predictions compose algebraically through
the pipeline, so the full reduction never needs to solve its own
(hundreds-of-vertices) output.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import solver
from .graph import Graph, disjoint_union, iter_bits


@dataclass(frozen=True)
class GadgetOutput:
    graph: Graph
    predicted_tau: int
    predicted_tauc: Optional[int]
    provenance: str


def _tau(g: Graph) -> int:
    return solver.tau_tauc(g)[0] if g.m else 0


def fix_tauc(g: Graph, tau: Optional[int] = None) -> GadgetOutput:
    """Per vertex v add v' and v'' with edges vv', v'v''.

    The output keeps tau(g) visible, tau = n + tau(g), while pinning
    tau_c = 2n.  Requires a connected input with an edge.
    """
    if g.m == 0:
        raise ValueError("fix_tauc needs at least one edge")
    if not g.is_connected():
        raise ValueError("fix_tauc needs a connected input")
    if tau is None:
        tau = _tau(g)
    n = g.n
    edges = g.edges()
    for v in range(n):
        edges.append((v, n + v))
        edges.append((n + v, 2 * n + v))
    graph = Graph.from_edges(3 * n, edges)
    return GadgetOutput(graph, n + tau, 2 * n,
                        f"fixtauc(n={n},m={g.m})")


def fix_tau(g: Graph, tau: Optional[int] = None) -> GadgetOutput:
    """Edge/vertex split construction pinning tau while keeping tau(g) in tau_c.

    Per vertex v: vertices v, v', v'' and edges vv', vv'', vw.  Per edge
    e=uv: vertices e, e' and edges ee', eu'', ev''.  Plus the hub edge
    ww'.  The original edges of g are not kept.  tau = n + m + 1 and
    tau_c = n + m + 1 + tau(g).

    Labels: originals 0..n-1, then v' block, then v'' block, then edge
    vertices in sorted edge order, then their pendants, then w, w'.
    """
    if g.m == 0:
        raise ValueError("fix_tau needs at least one edge")
    if tau is None:
        tau = _tau(g)
    n, m = g.n, g.m
    w = 3 * n + 2 * m
    edges = []
    for v in range(n):
        edges.append((v, n + v))          # vv'
        edges.append((v, 2 * n + v))      # vv''
        edges.append((v, w))              # vw
    for i, (u, v) in enumerate(g.edges()):
        e = 3 * n + i
        edges.append((e, 3 * n + m + i))  # ee'
        edges.append((e, 2 * n + u))      # eu''
        edges.append((e, 2 * n + v))      # ev''
    edges.append((w, w + 1))              # ww'
    graph = Graph.from_edges(3 * n + 2 * m + 2, edges)
    return GadgetOutput(graph, n + m + 1, n + m + 1 + tau,
                        f"fixtau(n={n},m={m})")


def connectify(g: Graph) -> Graph:
    """Wire one chosen vertex per component (smallest index) to a new hub w,
    and hang a pendant w' on w.  Raises tau by exactly one."""
    w = g.n
    edges = g.edges()
    for comp in g.connected_components():
        edges.append((min(comp), w))
    edges.append((w, w + 1))
    return Graph.from_edges(g.n + 2, edges)


def replicate_join(g: Graph, k: int, anchor: int, tau: Optional[int] = None) -> GadgetOutput:
    """k disjoint copies with every copy of the anchor wired to a new hub w,
    plus a pendant w'.  tau = k*tau(g) + 1; no closed form for tau_c."""
    if k < 1:
        raise ValueError("k must be positive")
    if not 0 <= anchor < g.n:
        raise ValueError(f"anchor {anchor} out of range 0..{g.n - 1}")
    if not g.is_connected():
        raise ValueError("replicate_join needs a connected input")
    if tau is None:
        tau = _tau(g)
    n = g.n
    w = k * n
    edges = []
    for j in range(k):
        off = j * n
        for u, v in g.edges():
            edges.append((off + u, off + v))
        edges.append((off + anchor, w))
    edges.append((w, w + 1))
    graph = Graph.from_edges(k * n + 2, edges)
    return GadgetOutput(graph, k * tau + 1, None,
                        f"replicate(n={n},k={k},anchor={anchor})")


def _pendant_support(g: Graph) -> Optional[int]:
    """Smallest vertex adjacent to a degree-1 vertex."""
    support = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            support |= g.rows[v]
    if support == 0:
        return None
    return (support & -support).bit_length() - 1


def join_disjoint(a: GadgetOutput, b: GadgetOutput) -> GadgetOutput:
    """Disjoint union plus one edge between a pendant-support vertex of each
    side.  Such vertices sit in minimum covers of their side and in every
    connected cover, so both tau and tau_c add up."""
    ua = _pendant_support(a.graph)
    ub = _pendant_support(b.graph)
    if ua is None or ub is None:
        raise ValueError("join_disjoint needs a vertex adjacent to a degree-1 vertex on each side")
    union = disjoint_union(a.graph, b.graph)
    edges = union.edges()
    edges.append((ua, a.graph.n + ub))
    graph = Graph.from_edges(union.n, edges)
    tauc = None
    if a.predicted_tauc is not None and b.predicted_tauc is not None:
        tauc = a.predicted_tauc + b.predicted_tauc
    return GadgetOutput(graph, a.predicted_tau + b.predicted_tau, tauc,
                        f"join[{a.provenance} + {b.provenance}]")


def solve_ab(phi1: int, phi2: int, r1: int, r2: int) -> tuple[int, int, int]:
    """Smallest non-negative integers with (a + 2b + phi1)/(a + b + phi2) = r1/r2.

    Closed form: c = max(ceil((phi1-phi2)/(r1-r2)), ceil((2*phi2-phi1)/(2*r2-r1))),
    then b = (r1-r2)*c - (phi1-phi2) and a = (2*r2-r1)*c - (2*phi2-phi1),
    which satisfy a + 2b + phi1 = r1*c and a + b + phi2 = r2*c exactly.
    """
    _check_ratio(r1, r2)
    if not phi2 < phi1 < 2 * phi2:
        raise ValueError(f"need phi2 < phi1 < 2*phi2, got phi1={phi1}, phi2={phi2}")
    d1 = phi1 - phi2
    d2 = 2 * phi2 - phi1
    c = max(-(-d1 // (r1 - r2)), -(-d2 // (2 * r2 - r1)))
    b = (r1 - r2) * c - d1
    a = (2 * r2 - r1) * c - d2
    assert a >= 0 and b >= 0
    assert a + 2 * b + phi1 == r1 * c and a + b + phi2 == r2 * c
    assert a <= 2 * r2 * (phi1 + phi2 + 2) and b <= 2 * r2 * (phi1 + phi2 + 2)
    return a, b, c


def attach_caterpillars(u: GadgetOutput, a: int, b: int) -> GadgetOutput:
    """Join two caterpillars at a pendant-support vertex of u.

    The first is a path on a vertices with a pendant on every path vertex;
    the second a path on 2b vertices with pendants on the even positions.
    Deltas: tau += a + b, tau_c += a + 2b.

    The attachment point is the smallest vertex adjacent to a degree-1
    vertex: it belongs to some minimum cover and to every connected cover
    of u, which is exactly what makes both deltas tight.  (Attaching at
    the degree-1 vertex itself would cost one extra tau_c vertex, since
    no minimum connected cover contains it.)
    """
    if a < 0 or b < 0:
        raise ValueError("caterpillar sizes must be non-negative")
    v = _pendant_support(u.graph)
    if v is None:
        raise ValueError("attach_caterpillars needs a vertex adjacent to a degree-1 vertex")
    n0 = u.graph.n
    edges = u.graph.edges()
    if a:
        # path u_1..u_a at n0..n0+a-1, its pendants at n0+a..n0+2a-1
        edges.append((v, n0))
        for i in range(a - 1):
            edges.append((n0 + i, n0 + i + 1))
        for i in range(a):
            edges.append((n0 + i, n0 + a + i))
    off = n0 + 2 * a
    if b:
        # path v_1..v_2b at off..off+2b-1, pendants on even positions after it
        edges.append((v, off))
        for i in range(2 * b - 1):
            edges.append((off + i, off + i + 1))
        for i in range(b):
            edges.append((off + 2 * i + 1, off + 2 * b + i))
    graph = Graph.from_edges(n0 + 2 * a + 3 * b, edges)
    tauc = None if u.predicted_tauc is None else u.predicted_tauc + a + 2 * b
    return GadgetOutput(graph, u.predicted_tau + a + b, tauc,
                        f"caterpillar[{u.provenance}; a={a}, b={b}]")


def _check_ratio(r1: int, r2: int) -> None:
    if r1 < 1 or r2 < 1 or not r2 < r1 < 2 * r2:
        raise ValueError(f"need r2 < r1 < 2*r2, got r1={r1}, r2={r2}")
    if math.gcd(r1, r2) != 1:
        raise ValueError(f"r1={r1} and r2={r2} must be coprime")


@dataclass(frozen=True)
class ReductionPlan:
    """All intermediate quantities of the ratio-threshold reduction."""

    r1: int
    r2: int
    n_g: int      # vertex count of the (connectified) left input
    n_h: int
    m_h: int
    tau_g: int    # tau of the (connectified) left input
    tau_h: int
    phi1: int
    phi2: int
    a: int
    b: int
    c: int
    predicted_tau: int
    predicted_tauc: int

    def __post_init__(self):
        _check_ratio(self.r1, self.r2)
        base = self.r1 * (self.n_h + self.m_h + 1)
        if self.phi1 != 2 * self.r2 * self.n_g + base + 9:
            raise ValueError("phi1 does not match its closed form")
        if self.phi2 != self.r2 * self.n_g + base + 7:
            raise ValueError("phi2 does not match its closed form")
        if not self.phi2 < self.phi1 < 2 * self.phi2:
            raise ValueError("phi sandwich violated")
        # strictly positive by construction: phi1-phi2 = r2*n_g + 2,
        # 2*phi2-phi1 = r1*(n_h+m_h+1) + 5
        if self.phi1 - self.phi2 != self.r2 * self.n_g + 2:
            raise ValueError("phi1 - phi2 identity violated")
        if 2 * self.phi2 - self.phi1 != base + 5:
            raise ValueError("2*phi2 - phi1 identity violated")
        if self.a + 2 * self.b + self.phi1 != self.r1 * self.c:
            raise ValueError("a + 2b + phi1 != r1*c")
        if self.a + self.b + self.phi2 != self.r2 * self.c:
            raise ValueError("a + b + phi2 != r2*c")
        if self.predicted_tau != self.r2 * (self.tau_g + self.c):
            raise ValueError("predicted tau does not match r2*(tau_g + c)")
        if self.predicted_tauc != self.r1 * (self.tau_h + self.c):
            raise ValueError("predicted tau_c does not match r1*(tau_h + c)")

    @property
    def predicted_ratio(self) -> Fraction:
        return Fraction(self.predicted_tauc, self.predicted_tau)

    @property
    def decision(self) -> bool:
        """Whether the built instance has tau_c/tau <= r1/r2; equivalent to
        tau(H) <= tau(G)."""
        return self.predicted_ratio <= Fraction(self.r1, self.r2)

    def to_json_dict(self) -> dict:
        return {
            "r1": self.r1, "r2": self.r2,
            "n_g": self.n_g, "n_h": self.n_h, "m_h": self.m_h,
            "tau_g": self.tau_g, "tau_h": self.tau_h,
            "phi1": self.phi1, "phi2": self.phi2,
            "a": self.a, "b": self.b, "c": self.c,
            "predicted_tau": self.predicted_tau,
            "predicted_tauc": self.predicted_tauc,
            "predicted_ratio": f"{self.predicted_tauc}/{self.predicted_tau}",
            "decision": self.decision,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def full_reduction(g: Graph, h: Graph, r1: int, r2: int) -> tuple[Graph, ReductionPlan]:
    """Build the instance whose tau_c/tau is at most r1/r2 exactly when
    tau(h) <= tau(g).

    Pipeline: connectify disconnected inputs; replicate g by r2 and h by
    r1 with fresh hubs; pin tau_c on the g side and tau on the h side;
    join; pad with caterpillars sized by solve_ab so the base ratio hits
    r1/r2 exactly.
    """
    _check_ratio(r1, r2)
    if g.m == 0 or h.m == 0:
        raise ValueError("both inputs need at least one edge")
    g2 = g if g.is_connected() else connectify(g)
    h2 = h if h.is_connected() else connectify(h)
    tau_g = _tau(g2)
    tau_h = _tau(h2)
    n_g, n_h, m_h = g2.n, h2.n, h2.m

    g_rep = replicate_join(g2, r2, 0, tau=tau_g)
    h_rep = replicate_join(h2, r1, 0, tau=tau_h)
    left = fix_tauc(g_rep.graph, tau=g_rep.predicted_tau)
    right = fix_tau(h_rep.graph, tau=h_rep.predicted_tau)
    joined = join_disjoint(left, right)

    base = r1 * (n_h + m_h + 1)
    phi1 = 2 * r2 * n_g + base + 9
    phi2 = r2 * n_g + base + 7
    assert joined.predicted_tauc == r1 * tau_h + phi1
    assert joined.predicted_tau == r2 * tau_g + phi2
    a, b, c = solve_ab(phi1, phi2, r1, r2)
    final = attach_caterpillars(joined, a, b)

    plan = ReductionPlan(
        r1=r1, r2=r2, n_g=n_g, n_h=n_h, m_h=m_h,
        tau_g=tau_g, tau_h=tau_h, phi1=phi1, phi2=phi2,
        a=a, b=b, c=c,
        predicted_tau=final.predicted_tau,
        predicted_tauc=final.predicted_tauc,  # type: ignore[arg-type]
    )
    return final.graph, plan
