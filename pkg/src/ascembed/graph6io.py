"""graph6 and edge-list serialization.

graph6 here is the short form only (order <= 62): one order byte n+63, then
the upper triangle in column-major order packed into 6-bit bytes, each offset
by 63. Parse errors name the offending byte offset. The edge-list format is a
"n m" header followed by m lines "u v"; '#' starts a comment.
"""

from __future__ import annotations

from .errors import ParseError, PreconditionError
from .graph import Graph

_G6_MAX = 62


def write_graph6(g: Graph) -> str:
    """Minimal graph6 encoding; only orders 0..62 are representable."""
    if g.n > _G6_MAX:
        raise PreconditionError(f"graph6 output supports order <= {_G6_MAX}, got {g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.rows[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(63 + acc))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (surrounding whitespace tolerated)."""
    s = text.strip()
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    order = ord(s[0]) - 63
    if order < 0 or ord(s[0]) > 126:
        raise ParseError(f"order byte {s[0]!r} outside graph6 range", offset=0)
    if order > _G6_MAX:
        raise ParseError(f"multi-byte graph6 orders (> {_G6_MAX}) are not supported", offset=0)
    n = order
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise ParseError(f"expected {need} adjacency bytes for order {n}, got {len(s) - 1}", offset=1 + min(need, len(s) - 1))
    bits = []
    for i, ch in enumerate(s[1:], start=1):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ParseError(f"byte {ch!r} outside graph6 range", offset=i)
        bits.extend((val >> shift & 1) for shift in range(5, -1, -1))
    total = n * (n - 1) // 2
    if any(bits[total:]):
        raise ParseError("nonzero padding bits", offset=len(s) - 1)
    edges = []
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if bits[pos]:
                edges.append((u, v))
            pos += 1
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    """Edge-list text: header "n m", then one "u v" line per edge (u < v)."""
    lines = [f"{g.n} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text; blank lines and '#' comments are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("edge list has no header line 'n m'")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: header must be two integers, got {header!r}") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative counts in header")
    if len(rows) - 1 != m:
        raise ParseError(f"header promises {m} edges but file has {len(rows) - 1} edge lines")
    edges = []
    seen = set()
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: edge endpoints must be integers, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: endpoint out of range for order {n}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)
