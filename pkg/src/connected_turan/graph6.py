"""graph6 encoding (one graph per line, optional ``>>graph6<<`` header)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import Graph6ParseError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def graph6_encode(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            bits.append(row >> u & 1)
    bits += [0] * (-len(bits) % 6)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        body.append(chr(63 + val))
    return _encode_n(g.n) + "".join(body)


def _decode_n(data: bytes, base: int) -> tuple[int, int]:
    def sextets(start: int, count: int) -> int:
        val = 0
        for i in range(start, start + count):
            if i >= len(data):
                raise Graph6ParseError("truncated size field", base + i)
            c = data[i] - 63
            if not 0 <= c < 64:
                raise Graph6ParseError(f"invalid byte {data[i]!r} in size field", base + i)
            val = val << 6 | c
        return val

    if not data:
        raise Graph6ParseError("empty graph6 string", base)
    if data[0] != 126:
        c = data[0] - 63
        if not 0 <= c < 63:
            raise Graph6ParseError(f"invalid size byte {data[0]!r}", base)
        return c, 1
    if len(data) > 1 and data[1] == 126:
        return sextets(2, 6), 8
    return sextets(1, 3), 4


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip()
    base = len(text) - len(text.lstrip())
    if data.startswith(HEADER.encode()):
        base += len(HEADER)
        data = data[len(HEADER):]
    n, pos = _decode_n(data, base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6ParseError(
            f"expected {need} data bytes for n={n}, found {len(body)}", base + pos + min(len(body), need)
        )
    rows = [0] * n
    v, u = 1, 0
    for i, byte in enumerate(body):
        c = byte - 63
        if not 0 <= c < 64:
            raise Graph6ParseError(f"invalid data byte {byte!r}", base + pos + i)
        for shift in range(5, -1, -1):
            if v >= n:
                if c >> shift & 1:
                    raise Graph6ParseError("non-zero padding bits", base + pos + i)
                continue
            if c >> shift & 1:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
            u += 1
            if u == v:
                v, u = v + 1, 0
    return Graph(n, tuple(rows))


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode every non-blank line; ``#`` lines are treated as comments."""
    for line in lines:
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield graph6_decode(s)


def read_graph6_file(path: str) -> list[Graph]:
    with open(path) as fh:
        return list(read_graph6(fh))
