"""Pure-Python search kernels.

Reference implementation of the hot inner loops: exact vertex cover,
exact connected vertex cover, canonical labeling, and induced-pattern
embedding.  The compiled backend in ``_fastcore`` mirrors these
functions bit for bit (same branching order, same tie-breaks), so both
return identical values; this module additionally works for graphs
wider than 64 vertices because masks are plain Python ints.

All functions take adjacency as a sequence of bit rows.
"""

from __future__ import annotations

import sys
from typing import Optional, Sequence

if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)


def _low_index(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _matching_lb(rows: Sequence[int], active: int) -> int:
    """Greedy matching among edges with both endpoints in ``active``.

    A vertex cover needs one vertex per matching edge, so this is a
    valid lower bound for covering the active edges.
    """
    used = 0
    lb = 0
    todo = active
    while todo:
        a = _low_index(todo)
        todo &= todo - 1
        if used >> a & 1:
            continue
        nb = rows[a] & active & ~used
        nb &= ~((1 << (a + 1)) - 1)  # only partners above a; each edge seen once
        if nb:
            used |= (1 << a) | (nb & -nb)
            lb += 1
    return lb


def vc_solve(rows: Sequence[int], n: int, forced_in: int = 0, forced_out: int = 0,
             bound: Optional[int] = None) -> Optional[tuple[int, int]]:
    """Minimum vertex cover containing forced_in, avoiding forced_out.

    Returns (size, mask) for an optimal cover of size <= bound, or None.
    Branch and bound: degree-1 kernelization, branching on a maximum
    degree vertex (take it, or take its whole neighborhood), greedy
    matching lower bound.
    """
    full = (1 << n) - 1
    if forced_in & forced_out:
        return None
    limit = bound if bound is not None else n
    best: list[Optional[tuple[int, int]]] = [None]

    def rec(cover: int, banned: int) -> None:
        # reduction fixpoint
        while True:
            # a banned vertex with an active edge forces all its active neighbors
            forced = 0
            for v in _iter_bits(banned & ~cover):
                nb = rows[v] & ~cover
                if nb & banned:
                    return  # an edge with both endpoints banned: infeasible
                forced |= nb
            forced &= ~cover
            if forced:
                cover |= forced
                continue
            # degree-1 kernelization: take the neighbor of the lowest pendant
            pend = -1
            for v in _iter_bits(full & ~cover):
                nb = rows[v] & ~cover
                if nb and nb & (nb - 1) == 0:
                    pend = _low_index(nb)
                    break
            if pend >= 0:
                cover |= 1 << pend
                continue
            break
        size = cover.bit_count()
        allowed = limit if best[0] is None else best[0][0] - 1
        if size > allowed:
            return
        active = 0
        for v in _iter_bits(full & ~cover):
            if rows[v] & ~cover:
                active |= 1 << v
        if not active:
            best[0] = (size, cover)
            return
        if size + _matching_lb(rows, active) > allowed:
            return
        # branch on a maximum-degree active vertex (lowest index on ties)
        bv = -1
        bd = -1
        for v in _iter_bits(active):
            d = (rows[v] & active).bit_count()
            if d > bd:
                bd = d
                bv = v
        rec(cover | (1 << bv), banned)
        if not (banned >> bv & 1):
            rec(cover | (rows[bv] & ~cover), banned | (1 << bv))

    rec(forced_in, forced_out)
    return best[0]


def cvc_exists(rows: Sequence[int], n: int, k: int, forced_in: int = 0,
               forced_out: int = 0) -> Optional[int]:
    """A connected vertex cover of size <= k, or None.

    The input graph must be connected with at least one edge.  The cover
    must contain forced_in and avoid forced_out.  Enumerates connected
    vertex subsets by frontier extension with an exclusion set, pruned by
    a matching lower bound on the uncovered edges and by reachability.
    """
    full = (1 << n) - 1
    if forced_in & forced_out:
        return None
    if k < 1:
        return None

    # single-vertex covers: a star center
    for v in range(n):
        if forced_out >> v & 1 or forced_in & ~(1 << v):
            continue
        if all(rows[u] & ~(1 << v) == 0 for u in range(n) if u != v):
            return 1 << v

    # every cover of size >= 2 contains the support of every pendant vertex:
    # covering the pendant edge with the pendant itself would isolate it
    supports = 0
    for v in range(n):
        if rows[v].bit_count() == 1:
            supports |= rows[v]
    if supports & forced_out:
        return None
    forced_in |= supports
    if forced_in.bit_count() > k:
        return None

    def neighborhood(mask: int) -> int:
        nb = 0
        for v in _iter_bits(mask):
            nb |= rows[v]
        return nb

    def dfs(S: int, X: int) -> Optional[int]:
        rest = full & ~S
        # greedy matching over uncovered edges; detect edges stuck inside X
        lb = 0
        used = 0
        todo = rest
        while todo:
            a = _low_index(todo)
            todo &= todo - 1
            high = rows[a] & rest & ~((1 << (a + 1)) - 1)
            if high and (X >> a & 1) and high & X:
                return None  # uncovered edge with both endpoints excluded
            if used >> a & 1:
                continue
            nb = high & ~used
            if nb:
                used |= (1 << a) | (nb & -nb)
                lb += 1
        missing = forced_in & ~S
        if lb == 0 and not missing:
            return S
        size = S.bit_count()
        if size >= k:
            return None
        if size + max(lb, missing.bit_count()) > k:
            return None
        # region reachable from S without crossing X
        R = S
        while True:
            grow = neighborhood(R) & ~X & ~R
            if not grow:
                break
            R |= grow
        if missing & ~R:
            return None
        out = rest & ~R
        for a in _iter_bits(out):
            if rows[a] & rest & ~R & ~((1 << (a + 1)) - 1):
                return None  # uncovered edge unreachable from S
        frontier = neighborhood(S) & ~S & ~X
        if not frontier:
            return None
        pref = frontier & forced_in
        f = _low_index(pref) if pref else _low_index(frontier)
        got = dfs(S | (1 << f), X)
        if got is not None:
            return got
        if forced_in >> f & 1:
            return None
        return dfs(S, X | (1 << f))

    if forced_in:
        root = _low_index(forced_in)
        return dfs(1 << root, forced_out)
    # any cover contains an endpoint of the first edge
    u = -1
    for v in range(n):
        if rows[v]:
            u = v
            break
    if u < 0:
        return None  # no edges; callers never do this
    w = _low_index(rows[u])
    if not forced_out >> u & 1:
        got = dfs(1 << u, forced_out)
        if got is not None:
            return got
    if not forced_out >> w & 1:
        return dfs(1 << w, forced_out | (1 << u))
    return None


def canon_key(rows: Sequence[int], n: int) -> bytes:
    """Canonical form: minimum upper-triangle bit string over all relabelings.

    Column-major bit order (pairs (0,1),(0,2),(1,2),(0,3),...), matching
    the graph6 bit layout.  Depth-first search over vertex placements with
    prefix pruning against the best complete labeling found so far.
    """
    if n == 1:
        return bytes([0, 1])
    # best[j] is the bit column of position j in the smallest labeling found
    # so far; INF marks suffix columns invalidated by a prefix improvement
    inf = 1 << 64
    best = [inf] * n
    best[0] = 0
    placed = [0] * n

    def dfs(pos: int, used: int) -> None:
        if pos == n:
            return
        for c in range(n):
            if used >> c & 1:
                continue
            col = 0
            rc = rows[c]
            for i in range(pos):
                col |= (rc >> placed[i] & 1) << i
            if col > best[pos]:
                continue
            if col < best[pos]:
                best[pos] = col
                for j in range(pos + 1, n):
                    best[j] = inf
            placed[pos] = c
            dfs(pos + 1, used | (1 << c))

    dfs(0, 0)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(best[j] >> i & 1)
    out = bytearray([n >> 8, n & 0xFF])
    acc = 0
    width = 0
    for b in bits:
        acc = (acc << 1) | b
        width += 1
        if width == 8:
            out.append(acc)
            acc = 0
            width = 0
    if width:
        out.append(acc << (8 - width))
    return bytes(out)


def induced_embedding(host_rows: Sequence[int], hn: int, pat_rows: Sequence[int],
                      pn: int, order: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Injective map witnessing an induced embedding of the pattern, or None.

    ``order`` is the pattern-vertex search order.  Backtracking over
    degree-feasible host candidates with adjacency and non-adjacency
    checks at every extension; host candidates are tried ascending, so
    the first embedding found is deterministic.
    """
    if pn > hn:
        return None
    pdeg = [pat_rows[v].bit_count() for v in range(pn)]
    hdeg = [host_rows[v].bit_count() for v in range(hn)]
    assign = [-1] * pn

    def dfs(idx: int, used: int) -> bool:
        if idx == pn:
            return True
        pv = order[idx]
        prow = pat_rows[pv]
        for hv in range(hn):
            if used >> hv & 1 or hdeg[hv] < pdeg[pv]:
                continue
            hrow = host_rows[hv]
            ok = True
            for j in range(idx):
                pu = order[j]
                if (prow >> pu & 1) != (hrow >> assign[pu] & 1):
                    ok = False
                    break
            if ok:
                assign[pv] = hv
                if dfs(idx + 1, used | (1 << hv)):
                    return True
                assign[pv] = -1
        return False

    if dfs(0, 0):
        return tuple(assign)
    return None
