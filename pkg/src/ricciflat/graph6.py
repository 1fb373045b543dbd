"""graph6 reading and writing, bit-compatible with nauty's ``geng``/``showg``."""

from __future__ import annotations

from typing import Iterable, Iterator

from .exceptions import MalformedGraph6
from .graph import Graph

__all__ = ["parse_graph6", "emit_graph6", "upper_triangle_bits"]

_HEADER = ">>graph6<<"


def upper_triangle_bits(g: Graph) -> Iterator[int]:
    """Adjacency bits in graph6 order: x(0,1), x(0,2), x(1,2), x(0,3), ..."""
    masks = g.masks
    for j in range(1, g.n):
        mj = masks[j]
        for i in range(j):
            yield mj >> i & 1


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """Encode `g` as a header-less graph6 string (no trailing newline)."""
    out = [_encode_size(g.n)]
    value = 0
    count = 0
    for bit in upper_triangle_bits(g):
        value = value << 1 | bit
        count += 1
        if count == 6:
            out.append(chr(value + 63))
            value = count = 0
    if count:
        out.append(chr((value << (6 - count)) + 63))
    return "".join(out)


def _decode_size(data: list[int]) -> tuple[int, int]:
    if not data:
        raise MalformedGraph6("empty graph6 string")
    if data[0] != 63 + 63:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 8-byte size field")
        body = data[2:8]
        offset = 8
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated 4-byte size field")
        body = data[1:4]
        offset = 4
    n = 0
    for c in body:
        n = n << 6 | (c - 63)
    return n, offset


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header is tolerated."""
    text = text.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if text.startswith(":") or text.startswith("&"):
        raise MalformedGraph6("sparse6/digraph6 input is not graph6")
    data = [ord(ch) for ch in text]
    bad = [ch for ch in text if not 63 <= ord(ch) <= 126]
    if bad:
        raise MalformedGraph6(f"character {bad[0]!r} outside the printable range 63..126")
    n, offset = _decode_size(data)
    if n < 1:
        raise MalformedGraph6(f"bad size byte (n={n})")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != expected:
        raise MalformedGraph6(
            f"expected {expected} adjacency bytes for n={n}, found {len(body)}"
        )
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] - 63 >> (5 - k % 6) & 1:
                pairs.append((i, j))
            k += 1
    # Padding bits must be zero for a bit-exact round trip.
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, pairs)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse every non-blank line; errors propagate with their line number."""
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except MalformedGraph6 as exc:
            raise MalformedGraph6(str(exc), line=lineno) from None
