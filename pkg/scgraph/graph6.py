"""
graph6 reading and writing (single-byte length form, n <= 62).

Encoding and decoding go through networkx. This module adds the checks
networkx leaves out: the short-form vertex limit, characters below 63 and
nonzero padding bits after the upper triangle.
"""

from typing import Iterable, Iterator

import networkx as nx

from scgraph.errors import Graph6Error
from scgraph.graph import MAX_VERTICES, Graph, from_networkx, to_networkx

HEADER = '>>graph6<<'


def write_graph6(g: Graph) -> str:
    """Encode g as a graph6 string (no trailing newline)."""
    if g.n > MAX_VERTICES:
        raise Graph6Error(f"graph6 short form holds at most {MAX_VERTICES} vertices, got {g.n}")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode('ascii').rstrip('\n')


def _check_short_form(line: str) -> None:
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126")
    n = ord(line[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error(f"length byte {line[0]!r} is not a short-form vertex count (n <= {MAX_VERTICES})")
    data = line[1:]
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(data) != expected:
        raise Graph6Error(f"n={n} needs {expected} data bytes, got {len(data)}")
    padding = 6 * len(data) - n * (n - 1) // 2
    if data and (ord(data[-1]) - 63) & ((1 << padding) - 1):
        raise Graph6Error("nonzero padding bits after the upper triangle")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; surrounding whitespace is ignored."""
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 string")
    _check_short_form(line)
    try:
        h = nx.from_graph6_bytes(line.encode('ascii'))
    except (ValueError, nx.NetworkXError) as e:
        raise Graph6Error(str(e)) from e
    return from_networkx(h)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a line-per-graph stream, skipping blank lines."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)
