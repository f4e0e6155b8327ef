"""Exact vertex cover, connected vertex cover, and price of connectivity.

tau and tau_c are computed per connected component and summed; edgeless
components contribute zero.  Witnesses are exact minimizers, with ties
broken by the numerically smallest bitmask so results are reproducible.
All ratio arithmetic is exact rational; floating point never enters a
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import kernels
from .graph import Graph, VertexSet, iter_bits


class PocUndefinedError(ValueError):
    """Raised when the price of connectivity is requested for an edgeless graph."""


@dataclass(frozen=True)
class ComponentSolve:
    component: VertexSet
    value: int
    witness: VertexSet


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet
    per_component: tuple[ComponentSolve, ...]


def _translate(mask: int, old: tuple[int, ...], n: int) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << old[i]
    return out


def _solve_components(g: Graph, connected: bool) -> SolveResult:
    total = 0
    witness = 0
    parts = []
    for comp in g.connected_components():
        sub, old = g.induced_subgraph(comp)
        if sub.m == 0:
            value, mask = 0, 0
        elif connected:
            value, mask = kernels.cvc_min(sub.rows, sub.n)
        else:
            value, mask = kernels.vc_min(sub.rows, sub.n)
        tmask = _translate(mask, old, g.n)
        total += value
        witness |= tmask
        parts.append(ComponentSolve(comp, value, VertexSet(g.n, tmask)))
    return SolveResult(total, VertexSet(g.n, witness), tuple(parts))


def vertex_cover_number(g: Graph) -> SolveResult:
    """tau(g) with the minimum-bitmask optimal witness."""
    return _solve_components(g, connected=False)


def connected_vertex_cover_number(g: Graph) -> SolveResult:
    """tau_c(g): per component with edges, the smallest vertex cover whose
    induced subgraph is connected; edgeless components contribute 0."""
    return _solve_components(g, connected=True)


def tau_tauc(g: Graph) -> tuple[int, int]:
    """(tau, tau_c) values only, memoized by canonical form.

    The criticality checkers re-solve many isomorphic subgraphs; for
    n <= 10 the cache key is the exact canonical form, beyond that the
    labeled graph itself.
    """
    key = _memo_key(g)
    hit = _value_cache.get(key)
    if hit is not None:
        return hit
    tau = 0
    tauc = 0
    for comp in g.connected_components():
        sub, _ = g.induced_subgraph(comp)
        if sub.m == 0:
            continue
        t = kernels.vc_solve(sub.rows, sub.n)[0]  # type: ignore[index]
        tau += t
        tauc += kernels.cvc_value(sub.rows, sub.n, t)
    _value_cache[key] = (tau, tauc)
    return tau, tauc


_value_cache: dict = {}
_CANON_MEMO_MAX = 10


def _memo_key(g: Graph):
    if g.n <= _CANON_MEMO_MAX:
        return kernels.canon_key(g.rows, g.n)
    return (g.n, g.rows)


def clear_cache() -> None:
    _value_cache.clear()


def poc(g: Graph) -> Fraction:
    """Exact price of connectivity tau_c/tau, always in [1, 2)."""
    if g.m == 0:
        raise PocUndefinedError("the price of connectivity needs at least one edge")
    tau, tauc = tau_tauc(g)
    return Fraction(tauc, tau)


def all_minimum_vertex_covers(g: Graph, cap: int = 24) -> list[VertexSet]:
    """Every vertex cover of size tau(g), sorted by bitmask.

    The list can be exponential, hence the instance-size guard.
    """
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds the enumeration cap of {cap}")
    tau = kernels.vc_solve(g.rows, g.n)[0]  # type: ignore[index]
    found: set[int] = set()
    rows = g.rows

    def first_uncovered(cover: int) -> tuple[int, int] | None:
        for u in range(g.n):
            if cover >> u & 1:
                continue
            rest = rows[u] & ~cover & ~((1 << (u + 1)) - 1)
            if rest:
                return u, (rest & -rest).bit_length() - 1
        return None

    def rec(cover: int, size: int) -> None:
        if size > tau:
            return
        edge = first_uncovered(cover)
        if edge is None:
            found.add(cover)
            return
        u, v = edge
        rec(cover | (1 << u), size + 1)
        rec(cover | (1 << v), size + 1)

    rec(0, 0)
    return [VertexSet(g.n, mask) for mask in sorted(found)]


# -- definitional re-checks ---------------------------------------------------

def is_vertex_cover(g: Graph, s: "VertexSet | Iterable[int]") -> bool:
    mask = s.mask if isinstance(s, VertexSet) else VertexSet.of(g.n, s).mask
    return all(g.rows[u] & ~mask == 0 for u in range(g.n) if not mask >> u & 1)


def is_connected_vertex_cover(g: Graph, s: "VertexSet | Iterable[int]") -> bool:
    """Covers every edge; connected and non-empty inside every component
    with edges; disjoint from edgeless components."""
    mask = s.mask if isinstance(s, VertexSet) else VertexSet.of(g.n, s).mask
    if not is_vertex_cover(g, VertexSet(g.n, mask)):
        return False
    for comp in g.connected_components():
        part = mask & comp.mask
        sub, old = g.induced_subgraph(comp)
        if sub.m == 0:
            if part:
                return False
            continue
        if part == 0:
            return False
        local = 0
        index = {v: i for i, v in enumerate(old)}
        for v in iter_bits(part):
            local |= 1 << index[v]
        start = (local & -local).bit_length() - 1
        if sub._component_mask(start, local) != local:
            return False
    return True
