"""graph6 interchange format (6-bit chunks offset by 63, column-major upper triangle)."""

from __future__ import annotations

from .graphs import Graph, GraphError

_HEADER = ">>graph6<<"


def _parse_order(s: str) -> tuple[int, int]:
    """Return (n, chars consumed)."""
    if not s:
        raise GraphError("empty graph6 string")
    c = ord(s[0])
    if c == 126:
        if len(s) >= 2 and ord(s[1]) == 126:
            if len(s) < 8:
                raise GraphError("graph6: truncated 8-byte order")
            vals = [ord(ch) - 63 for ch in s[2:8]]
            if any(v < 0 or v > 63 for v in vals):
                raise GraphError("graph6: order byte out of range")
            n = 0
            for v in vals:
                n = n << 6 | v
            return n, 8
        if len(s) < 4:
            raise GraphError("graph6: truncated 4-byte order")
        vals = [ord(ch) - 63 for ch in s[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise GraphError("graph6: order byte out of range")
        n = 0
        for v in vals:
            n = n << 6 | v
        return n, 4
    if not 63 <= c <= 125:
        raise GraphError(f"graph6: order char {s[0]!r} out of range")
    return c - 63, 1


def parse_graph6(text: str, *, allow_disconnected: bool = False) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    n, used = _parse_order(s)
    if n < 1:
        raise GraphError("graph6: graph must have at least one vertex")
    body = s[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6: body length {len(body)}, expected {need}")
    bits = []
    for ch in body:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphError(f"graph6: char {ch!r} out of range")
        v = c - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                edges.append((row, col))
            i += 1
    return Graph(n, edges, allow_disconnected=allow_disconnected)


def encode_graph6(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise GraphError("graph6: graph too large to encode")
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if col in G.adj[row] else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = [
        chr(sum(b << shift for b, shift in zip(bits[i : i + 6], range(5, -1, -1))) + 63)
        for i in range(0, len(bits), 6)
    ]
    return head + "".join(chunks)
