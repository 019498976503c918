"""graph6 reading and writing (short form, n <= 62)."""
from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    line = text.strip("\n")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable graph6 range", i)
    if line[0] == "~":
        raise Graph6Error("long-form graph6 headers (n > 62) are not supported", 0)
    n = ord(line[0]) - 63
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    payload = line[1:]
    if len(payload) < nbytes:
        raise Graph6Error(f"truncated bitstream: expected {nbytes} data bytes", len(line))
    if len(payload) > nbytes:
        raise Graph6Error("trailing bytes after the bitstream", 1 + nbytes)
    bits = []
    for ch in payload:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[npairs:]):
        raise Graph6Error("nonzero padding bits", len(line) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("long-form graph6 (n > 62) is not supported")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def read_graph6_stream(stream: IO[str] | Iterable[str]) -> Iterator[Graph]:
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.args[0].rsplit(' (', 1)[0]}", exc.offset) from None
