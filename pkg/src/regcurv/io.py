"""graph6 and edge-list serialization.

Only the single-byte size prefix of graph6 is supported (``n < 63``).
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import MalformedEdgeList, MalformedGraph6, UnsupportedSize
from .graphcore import Graph

MAX_GRAPH6_N = 62


def _upper_pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header and
    trailing newline are tolerated)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise MalformedGraph6("empty graph6 record")
    for b in data:
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"byte {b!r} outside 63..126")
    n = data[0] - 63
    if n == 63:
        raise UnsupportedSize("graph6 with n >= 63 is not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise MalformedGraph6(
            f"expected {nbytes} data bytes for n={n}, found {len(body)}"
        )
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    total = 6 * nbytes
    edges = []
    for k, (i, j) in enumerate(_upper_pairs(n)):
        if (bits >> (total - 1 - k)) & 1:
            edges.append((i, j))
    if nbits < total and bits & ((1 << (total - nbits)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 record without the trailing newline."""
    n = g.n
    if n > MAX_GRAPH6_N:
        raise UnsupportedSize(f"graph6 emission supports n <= {MAX_GRAPH6_N}, got {n}")
    out = bytearray([n + 63])
    acc = 0
    width = 0
    for i, j in _upper_pairs(n):
        acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
        width += 1
        if width == 6:
            out.append(acc + 63)
            acc = 0
            width = 0
    if width:
        out.append((acc << (6 - width)) + 63)
    return bytes(out)


def iter_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[tuple[int, bytes | str]]:
    """Yield ``(line_number, record)`` for non-blank lines, 1-based."""
    for lineno, raw in enumerate(lines, start=1):
        rec = raw.strip()
        if rec:
            yield lineno, rec


def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Vertex tokens may be arbitrary labels; they are relabeled to dense
    indices in order of first appearance (integers ``0..n-1`` given in
    full keep their values). Returns the graph and the index->label map.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise MalformedEdgeList("missing header line 'n m'")
    header = rows[0]
    try:
        n, m = int(header[0]), int(header[1])
    except (IndexError, ValueError):
        raise MalformedEdgeList(f"bad header {' '.join(header)!r}") from None
    if len(header) != 2 or n < 0 or m < 0:
        raise MalformedEdgeList(f"bad header {' '.join(header)!r}")
    body = rows[1:]
    if len(body) != m:
        raise MalformedEdgeList(f"header declares {m} edges, found {len(body)}")
    pairs = []
    for toks in body:
        if len(toks) != 2:
            raise MalformedEdgeList(f"bad edge line {' '.join(toks)!r}")
        pairs.append((toks[0], toks[1]))

    tokens = [t for p in pairs for t in p]
    if all(t.isdigit() and int(t) < n for t in tokens):
        labels = [str(i) for i in range(n)]
        index = {lab: i for i, lab in enumerate(labels)}
    else:
        labels = []
        index = {}
        for t in tokens:
            if t not in index:
                index[t] = len(labels)
                labels.append(t)
        if len(labels) > n:
            raise MalformedEdgeList(f"{len(labels)} distinct labels exceed n={n}")
        labels += [f"_isolated{k}" for k in range(n - len(labels))]
    try:
        g = Graph.from_edges(n, [(index[a], index[b]) for a, b in pairs])
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from None
    return g, labels


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(emit_graph6(g).decode("ascii") + "\n")
