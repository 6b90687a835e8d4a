"""graph6 (short form) and plain edge-list text formats."""
from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

from .graph import Graph

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise FormatError(f"short-form graph6 supports n <= {GRAPH6_MAX_N}, got {n}")
    rows = g.rows
    out = [chr(n + 63)]
    acc = nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (rows[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in vals):
        raise FormatError(f"invalid graph6 character in {text!r}")
    n = vals[0]
    if n == 63:
        raise FormatError("long-form graph6 (n > 62) is not supported")
    need = n * (n - 1) // 2
    body = vals[1:]
    if len(body) != (need + 5) // 6:
        raise FormatError(f"graph6 body length {len(body)} does not match n={n}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph.from_rows(rows)


def iter_graph6(path: str | Path) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, graph6_text)`` for the non-blank lines of a file."""
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if line:
                yield lineno, line


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_graph_file(path: str | Path) -> Graph:
    """Read a single graph; a leading integer line means edge list, else graph6."""
    text = Path(path).read_text(encoding="ascii")
    first = text.lstrip().split("\n", 1)[0].strip()
    if first.isdigit():
        return from_edge_list(text)
    return from_graph6(first)
