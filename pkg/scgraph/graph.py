"""
Simple undirected graphs on vertices 0..n-1.

Adjacency is stored as one bitmask per vertex (bit u of rows[v] is set iff
uv is an edge). Graphs are immutable; every operation returns a new graph.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from scgraph.errors import VertexError

VertexSet = FrozenSet[int]

MAX_VERTICES = 62


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """A simple graph with bitmask adjacency rows."""

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise VertexError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise VertexError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise VertexError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise VertexError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise VertexError(f"asymmetric adjacency between {v} and {u}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise VertexError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> 'Graph':
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> 'Graph':
        return cls.from_edges(n, ((v, v + 1) for v in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> 'Graph':
        return cls.from_edges(n, ((v, (v + 1) % n) for v in range(n)))

    # -- queries ----------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def row(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> VertexSet:
        """N(v)."""
        return frozenset(bits(self.rows[v]))

    def non_neighbors(self, v: int) -> VertexSet:
        """The non-neighbours of v; v itself is included."""
        full = (1 << self.n) - 1
        return frozenset(bits(full & ~self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def has_triangle(self) -> bool:
        return any(self.rows[u] & self.rows[v] for u, v in self.edges())

    def is_triangle_free(self) -> bool:
        return not self.has_triangle()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def check_vertices(g: Graph, vertices: Iterable[int]) -> List[int]:
    """Return vertices as a list, raising VertexError on range errors or repeats."""
    out = list(vertices)
    for v in out:
        if not 0 <= v < g.n:
            raise VertexError(f"vertex {v} outside 0..{g.n - 1}")
    if len(set(out)) != len(out):
        raise VertexError(f"repeated vertex in {out}")
    return out


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def relabel(g: Graph, labeling: Sequence[int]) -> Graph:
    """Graph whose vertex labeling[v] plays the role of v in g."""
    rows = [0] * g.n
    for v, row in enumerate(g.rows):
        image = 0
        for u in bits(row):
            image |= 1 << labeling[u]
        rows[labeling[v]] = image
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """G[s], relabeled 0..|s|-1 in increasing vertex order.

    Returns the subgraph and the mapping: mapping[i] is the vertex of g that
    became vertex i.
    """
    mapping = tuple(sorted(check_vertices(g, s)))
    position = {v: i for i, v in enumerate(mapping)}
    rows = []
    for v in mapping:
        row = 0
        for u in bits(g.rows[v] & mask_of(mapping)):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(len(mapping), tuple(rows)), mapping


def is_induced_p4(g: Graph, quad: Sequence[int]) -> bool:
    """True iff w-x-y-z is an induced path in this order."""
    w, x, y, z = check_vertices(g, quad)
    return (g.has_edge(w, x) and g.has_edge(x, y) and g.has_edge(y, z)
            and not g.has_edge(w, y) and not g.has_edge(w, z)
            and not g.has_edge(x, z))


def p4_path_order(g: Graph, quad: Iterable[int]):
    """Order a 4-set along the P4 it induces, or return None.

    The walk starts from the end vertex with the lower index.
    """
    quad = check_vertices(g, quad)
    if len(quad) != 4:
        raise VertexError(f"expected 4 vertices, got {len(quad)}")
    inside = mask_of(quad)
    degree = {v: (g.rows[v] & inside).bit_count() for v in quad}
    if sorted(degree.values()) != [1, 1, 2, 2]:
        return None
    order = [min(v for v in quad if degree[v] == 1)]
    while len(order) < 4:
        step = g.rows[order[-1]] & inside & ~mask_of(order)
        if not step:
            return None
        order.append(next(bits(step)))
    ordered = tuple(order)
    return ordered if is_induced_p4(g, ordered) else None


def is_induced_c5(g: Graph, five: Iterable[int]) -> bool:
    """True iff the 5-set induces a chordless 5-cycle.

    A 2-regular graph on five vertices can only be C5.
    """
    five = check_vertices(g, five)
    if len(five) != 5:
        return False
    inside = mask_of(five)
    return all((g.rows[v] & inside).bit_count() == 2 for v in five)


def cycle_order(g: Graph, five: Iterable[int]) -> Tuple[int, ...]:
    """Walk an induced C5 from its lowest vertex towards the lower neighbour."""
    five = sorted(five)
    inside = mask_of(five)
    order = [five[0]]
    while len(order) < 5:
        order.append(next(bits(g.rows[order[-1]] & inside & ~mask_of(order))))
    return tuple(order)


def components(g: Graph, within: int) -> List[int]:
    """Connected components of G[within] as bitmasks, by lowest vertex."""
    out = []
    remaining = within
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= g.rows[v]
            grown &= within & ~comp
            comp |= grown
            frontier = grown
        out.append(comp)
        remaining &= ~comp
    return out


def all_pairs(n: int) -> Iterator[Tuple[int, int]]:
    return combinations(range(n), 2)


def to_networkx(g: Graph) -> nx.Graph:
    """networkx copy of g with nodes inserted in order 0..n-1."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Graph on 0..n-1 from a networkx graph whose nodes are exactly 0..n-1."""
    n = h.number_of_nodes()
    if set(h.nodes) != set(range(n)):
        raise VertexError(f"networkx nodes must be 0..{n - 1}")
    return Graph.from_edges(n, h.edges())
