"""Bit-exact graph6 and edge-list parsing/emission, plus DOT export.

graph6 layout: a size prefix N(n), then the upper triangle of the
adjacency matrix read column by column (pairs (0,1), (0,2), (1,2),
(0,3), ...), packed 6 bits per character, each offset by 63, zero
padded.  The short prefix covers n <= 62; the 4-byte form '~' + 3
characters covers n <= 258047.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, max_vertices

GRAPH6_HEADER = ">>graph6<<"
_SHORT_MAX = 62
_LONG_MAX = 258047


class FormatError(ValueError):
    """Malformed input; carries the 1-based source line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class GraphDocument:
    """An ordered batch of graphs with their 1-based source line numbers."""

    graphs: tuple[Graph, ...]
    line_numbers: tuple[int, ...]

    def __post_init__(self):
        if len(self.graphs) != len(self.line_numbers):
            raise ValueError("graphs and line numbers differ in length")
        if any(b <= a for a, b in zip(self.line_numbers, self.line_numbers[1:])):
            raise ValueError("line numbers must be strictly increasing")

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(zip(self.line_numbers, self.graphs))


# -- graph6 -------------------------------------------------------------------

def parse_graph6(line: str, lineno: int | None = None) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise FormatError("empty graph6 string", lineno)
    vals = []
    for ch in s:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise FormatError(f"character {ch!r} outside the graph6 range 63..126", lineno)
        vals.append(code - 63)
    if vals[0] < 63:
        n = vals[0]
        data = vals[1:]
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise FormatError("8-byte graph6 size prefix is not supported", lineno)
        if len(vals) < 4:
            raise FormatError("truncated extended size prefix", lineno)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    if n == 0:
        raise FormatError("graphs need at least one vertex", lineno)
    if n > max_vertices():
        raise FormatError(f"n={n} exceeds the configured cap of {max_vertices()}", lineno)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) < need:
        raise FormatError(f"truncated bit vector: need {need} data characters, got {len(data)}", lineno)
    if len(data) > need:
        raise FormatError(f"trailing characters after {need} data characters", lineno)
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if (data[idx // 6] >> (5 - idx % 6)) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    # padding bits must be zero
    while idx < need * 6:
        if (data[idx // 6] >> (5 - idx % 6)) & 1:
            raise FormatError("nonzero padding bits", lineno)
        idx += 1
    return Graph._raw(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= _SHORT_MAX:
        prefix = chr(n + 63)
    elif n <= _LONG_MAX:
        prefix = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise ValueError(f"n={n} is outside the supported graph6 range (max {_LONG_MAX})")
    out = [prefix]
    acc = 0
    width = 0
    for v in range(1, n):
        row = g.rows[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = 0
                width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def read_graph6_document(text: str) -> GraphDocument:
    graphs = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s:
            continue
        graphs.append(parse_graph6(s, lineno))
        lines.append(lineno)
    return GraphDocument(tuple(graphs), tuple(lines))


# -- edge list ----------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse 'n m' followed by m lines 'u v' (0-based).

    Blank lines and '#' comments are tolerated; malformed lines are
    reported with their line number.
    """
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        parts = s.split()
        if header is None:
            if len(parts) != 2:
                raise FormatError(f"expected header 'n m', got {s!r}", lineno)
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise FormatError(f"non-integer header {s!r}", lineno) from None
            continue
        if len(parts) != 2:
            raise FormatError(f"expected edge 'u v', got {s!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer edge {s!r}", lineno) from None
        edges.append((u, v, lineno))
    if header is None:
        raise FormatError("missing 'n m' header", None)
    n, m = header
    if n < 1:
        raise FormatError("graphs need at least one vertex", None)
    if len(edges) != m:
        raise FormatError(f"header announced {m} edges but {len(edges)} were given", None)
    for u, v, lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", lineno)
        if u == v:
            raise FormatError(f"self-loop ({u}, {v}) is not allowed", lineno)
    return Graph.from_edges(n, [(u, v) for u, v, _ in edges])


def emit_dot(g: Graph) -> str:
    """Deterministic DOT export: vertices then edges, ascending."""
    lines = ["graph {"]
    for v in range(g.n):
        lines.append(f"  v{v};")
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
