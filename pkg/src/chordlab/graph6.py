"""Bit-exact graph6 parsing/serialization plus a human-editable edge-list
format, and lazy corpus streaming with line numbers for error reporting.

Only the short form (n < 63) is supported: one size byte 63+n, then the
upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2),
x(0,3), ..., six bits per byte (value+63), zero-padded on the right.
"""

from __future__ import annotations

from .graphs import Graph


class Graph6Error(ValueError):
    """Malformed graph6 input; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def parse_graph6(line: str) -> Graph:
    if not line:
        raise Graph6Error("empty record")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = [ord(c) for c in line]
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range 63..126")
    if data[0] == 126:
        raise Graph6Error("long-form size prefix (n >= 63) not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) != need:
        raise Graph6Error(
            f"payload is {len(payload)} bytes, expected {need} for n={n}"
        )
    bits = []
    for b in payload:
        v = b - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.append((row, col))
            idx += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    if not g.simple:
        raise ValueError("graph6 cannot encode parallel edges")
    if g.n >= 63:
        raise ValueError("long form (n >= 63) not supported")
    present = set(g.edges)
    bits = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(1 if (row, col) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def stream_corpus(source):
    """Yield (lineno, Graph) pairs from a line-oriented reader or an
    iterable of strings.  Blank lines are skipped; parse failures raise
    Graph6Error naming the offending 1-based line."""
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(str(exc), line=lineno) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    rows = [r for r in (line.strip() for line in text.splitlines()) if r]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError('edge-list header must be "n m"')
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for r in rows[1:]:
        u, v = r.split()
        edges.append((int(u), int(v)))
    return Graph(n, edges)


def load_graph_text(text: str) -> Graph:
    """Accept either format: an edge list when the first line is two
    integers, a single graph6 record otherwise."""
    first = text.strip().splitlines()[0].split() if text.strip() else []
    if len(first) == 2 and all(tok.isdigit() for tok in first):
        return read_edge_list(text)
    return parse_graph6(text.strip().splitlines()[0])
