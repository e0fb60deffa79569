"""graph6 encoding for graphs of order at most 62, plus line-oriented readers."""

from __future__ import annotations

import gzip
import io
import sys
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .graph import MAX_ORDER, Graph


class Graph6Error(ValueError):
    pass


def parse_graph6(line: str, strict: bool = True) -> Graph:
    """Decode one graph6 line (single-byte size form only).

    With ``strict`` the padding bits of the last byte must be zero.
    """
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise Graph6Error("empty line")
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error(f"non-ASCII character at position {exc.start}") from None
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {i} ({c!r}) outside 63..126")
    n = data[0] - 63
    if n == 63:
        raise Graph6Error(f"multi-byte size form (order > {MAX_ORDER}) is not supported")
    if n == 0:
        raise Graph6Error("order 0 graphs are not supported")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    npairs = n * (n - 1) // 2
    nbytes = -(-npairs // 6)
    payload = data[1:]
    if len(payload) < nbytes:
        raise Graph6Error(f"truncated payload: need {nbytes} bytes, got {len(payload)}")
    if len(payload) > nbytes:
        raise Graph6Error(f"trailing bytes: need {nbytes} bytes, got {len(payload)}")
    word = 0
    for c in payload:
        word = word << 6 | (c - 63)
    pad = nbytes * 6 - npairs
    if strict and word & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    word >>= pad
    adj = [0] * n
    k = npairs - 1  # bit index of pair (0, 1), most significant first
    for j in range(1, n):
        for i in range(j):
            if word >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    word = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            word = word << 1 | (row >> i & 1)
    npairs = n * (n - 1) // 2
    nbytes = -(-npairs // 6)
    word <<= nbytes * 6 - npairs
    out = [chr(n + 63)]
    for b in range(nbytes - 1, -1, -1):
        out.append(chr((word >> (6 * b) & 63) + 63))
    return "".join(out)


@dataclass(frozen=True)
class LineError:
    lineno: int
    line: str
    message: str

    def __str__(self) -> str:
        return f"line {self.lineno}: {self.message}: {self.line!r}"


@dataclass(frozen=True)
class Record:
    """One successfully parsed input line."""

    lineno: int
    graph: Graph
    text: str


def open_text(source: str | Path) -> TextIO:
    """Open a path (``-`` for stdin); ``.gz`` files are decompressed."""
    if str(source) == "-":
        return sys.stdin
    path = Path(source)
    if path.suffix == ".gz":
        return io.TextIOWrapper(gzip.open(path, "rb"), encoding="ascii")
    return open(path, encoding="ascii")


def read_lines(lines: Iterable[str], strict_padding: bool = True) -> Iterator[Record | LineError]:
    """Parse lines one at a time; a bad line yields a ``LineError`` and reading goes on."""
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line, strict=strict_padding)
        except Graph6Error as exc:
            yield LineError(lineno, line, str(exc))
        else:
            yield Record(lineno, g, line)


def read_stream(source: str | Path, strict_padding: bool = True) -> Iterator[Record | LineError]:
    """Records from a graph6 file, gzip file, or stdin (``-``)."""
    try:
        fh = open_text(source)
    except OSError as exc:
        raise OSError(f"cannot open graph6 source {source}: {exc}") from exc
    try:
        yield from read_lines(fh, strict_padding)
    except UnicodeDecodeError as exc:
        raise OSError(f"{source}: not an ASCII graph6 file ({exc})") from exc
    finally:
        if fh is not sys.stdin:
            fh.close()


def read_graphs(source: str | Path, strict_padding: bool = True) -> Iterator[Graph]:
    """Graphs only; raises on the first malformed line."""
    for rec in read_stream(source, strict_padding):
        if isinstance(rec, LineError):
            raise Graph6Error(str(rec))
        yield rec.graph


def write_graphs(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(emit_graph6(g) + "\n")
        count += 1
    return count
