"""graph6 and edge-list text formats.

graph6 follows the published format: the order in one byte (value + 63) for
n < 63, or a 126-prefixed three-byte big-endian form up to the package cap of
512 vertices, followed by the upper triangle of the adjacency matrix read
column by column, packed into 6-bit groups offset by 63.  Padding bits must
be zero.
"""

from __future__ import annotations

from .bitset import bit
from .errors import ParseError, SizeError
from .graph import MAX_N, Graph


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 string")
    data = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise ParseError(f"character {ch!r} outside graph6 range")
        data.append(code)

    if data[0] == 63:  # long form
        if len(data) < 4:
            raise ParseError("truncated long-form size header")
        if data[1] == 63:
            raise ParseError("very-long graph6 form (n > 258047) not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_N:
        raise ParseError(f"graph6 order {n} exceeds supported maximum {MAX_N}")

    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ParseError(
            f"graph6 body length {len(body)} but {expect} groups expected for n={n}"
        )
    rows = [0] * n
    idx = 0
    for u in range(1, n):
        for v in range(u):
            group, offset = divmod(idx, 6)
            if body[group] & (1 << (5 - offset)):
                rows[u] |= bit(v)
                rows[v] |= bit(u)
            idx += 1
    if expect:
        pad = expect * 6 - nbits
        if pad and body[-1] & ((1 << pad) - 1):
            raise ParseError("nonzero padding bits in graph6 string")
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line for its current labeling."""
    n = g.n
    if n < 63:
        header = [n]
    elif n <= MAX_N:
        header = [63, n >> 12, (n >> 6) & 63, n & 63]
    else:  # unreachable through Graph, kept for clarity
        raise SizeError(f"graph6 encoding beyond {MAX_N} vertices unsupported")
    groups = []
    acc = 0
    filled = 0
    for u in range(1, n):
        col = g.adj[u]
        for v in range(u):
            acc = (acc << 1) | ((col >> v) & 1)
            filled += 1
            if filled == 6:
                groups.append(acc)
                acc = 0
                filled = 0
    if filled:
        groups.append(acc << (6 - filled))
    return "".join(chr(c + 63) for c in header + groups)


def parse_edge_list(text: str) -> Graph:
    """Parse the fixture format ``n m`` followed by ``m`` lines ``u v``."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ParseError("edge-list header must contain n and m")
    try:
        n, m = int(tokens[0]), int(tokens[1])
        rest = [int(t) for t in tokens[2:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token in edge list: {exc}") from exc
    if len(rest) != 2 * m:
        raise ParseError(f"expected {2 * m} endpoints, found {len(rest)}")
    try:
        return Graph.from_edges(n, zip(rest[::2], rest[1::2]))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
