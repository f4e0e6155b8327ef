"""Exhaustive enumeration of small connected graphs up to isomorphism.

Level n is built by augmenting every representative on n-1 vertices
with a new vertex attached to every non-empty neighborhood, then
deduplicating by exact canonical form.  Every connected graph has a
non-cut vertex, so each isomorphism class is reached.  Chordal graphs
get their own generator that only attaches the new vertex to cliques
(simplicial extension), which keeps n = 9 tractable.

Levels are cached per process and streamed in canonical-key order, so
repeated scans see identical sequences.
"""

from __future__ import annotations

from typing import Iterator

from . import kernels
from .graph import Graph, iter_bits

# connected graphs on 1..8 vertices up to isomorphism
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)

DEFAULT_ENUMERATION_CAP = 8
DEFAULT_CHORDAL_CAP = 9

_levels: dict[int, list[Graph]] = {}
_chordal_levels: dict[int, list[Graph]] = {}


def _augmentations(parent: Graph, neighborhoods: Iterator[int]) -> Iterator[tuple[bytes, Graph]]:
    n = parent.n + 1
    for nbm in neighborhoods:
        rows = list(parent.rows)
        rows.append(nbm)
        for u in iter_bits(nbm):
            rows[u] |= 1 << (n - 1)
        rows_t = tuple(rows)
        yield kernels.canon_key(rows_t, n), Graph._raw(n, rows_t)


def _level(n: int) -> list[Graph]:
    got = _levels.get(n)
    if got is not None:
        return got
    if n == 1:
        level = [Graph(1, (0,))]
    else:
        seen: dict[bytes, Graph] = {}
        for parent in _level(n - 1):
            all_nb = range(1, 1 << (n - 1))
            for key, g in _augmentations(parent, iter(all_nb)):
                if key not in seen:
                    seen[key] = g
        level = [g for _, g in sorted(seen.items())]
    _levels[n] = level
    return level


def enumerate_connected(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Graph]:
    """One representative per isomorphism class of connected n-vertex graphs,
    in canonical-key order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap of {cap}")
    yield from _level(n)


def _cliques(g: Graph) -> Iterator[int]:
    """All non-empty clique masks of g."""
    full = g.full_mask()

    def ext(cur: int, cand: int) -> Iterator[int]:
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            new = cur | (1 << v)
            yield new
            yield from ext(new, cand & g.rows[v])

    yield from ext(0, full)


def _chordal_level(n: int) -> list[Graph]:
    got = _chordal_levels.get(n)
    if got is not None:
        return got
    if n == 1:
        level = [Graph(1, (0,))]
    else:
        seen: dict[bytes, Graph] = {}
        for parent in _chordal_level(n - 1):
            for key, g in _augmentations(parent, _cliques(parent)):
                if key not in seen:
                    seen[key] = g
        level = [g for _, g in sorted(seen.items())]
    _chordal_levels[n] = level
    return level


def enumerate_connected_chordal(n: int, cap: int = DEFAULT_CHORDAL_CAP) -> Iterator[Graph]:
    """One representative per isomorphism class of connected chordal
    n-vertex graphs.

    Simplicial extension is complete: every connected chordal graph has a
    simplicial vertex, and removing one keeps the rest connected and
    chordal.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds the chordal enumeration cap of {cap}")
    yield from _chordal_level(n)


def clear_cache() -> None:
    _levels.clear()
    _chordal_levels.clear()
