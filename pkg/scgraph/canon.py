"""
Canonical labeling by colour refinement plus individualisation.

The search refines the vertex colouring to a stable partition, then branches
on the vertices of the first smallest non-singleton cell. Each discrete leaf
yields a relabeled adjacency; the largest one is canonical. Refinement and
cell choice depend only on the isomorphism class, so isomorphic graphs
produce the same set of leaves. Automorphisms found along the way prune
branches that can only repeat certificates already seen.
"""

from typing import List, Optional, Sequence, Tuple

from scgraph.graph import Graph, bits, relabel
from scgraph.graph6 import write_graph6


def refine(rows: Sequence[int], colors: Sequence[int]) -> List[int]:
    """Stable colour refinement (1-WL) of an ordered colouring.

    Colours are dense ranks; each new colour keeps the old colour as its
    leading key, so refinement never reorders existing cells.
    """
    colors = list(colors)
    count = len(set(colors))
    while True:
        cells = [0] * count
        for v, c in enumerate(colors):
            cells[c] |= 1 << v
        signatures = [
            (colors[v], tuple((row & cell).bit_count() for cell in cells))
            for v, row in enumerate(rows)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == count:
            return refined
        colors, count = refined, len(ranking)


def _individualize(colors: Sequence[int], v: int) -> List[int]:
    doubled = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
    ranking = {c: rank for rank, c in enumerate(sorted(set(doubled)))}
    return [ranking[c] for c in doubled]


def _target_cell(colors: Sequence[int]) -> List[int]:
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    candidates = [cell for c, cell in sorted(cells.items()) if len(cell) > 1]
    return min(candidates, key=len)


def _certificate(rows: Sequence[int], colors: Sequence[int]) -> Tuple[int, ...]:
    image = [0] * len(rows)
    for v, row in enumerate(rows):
        mapped = 0
        for u in bits(row):
            mapped |= 1 << colors[u]
        image[colors[v]] = mapped
    return tuple(image)


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


class _LeafSearch:
    """Depth-first search over the individualisation tree of one graph.

    Two leaves with the same certificate differ by an automorphism that fixes
    their common path prefix. A leaf equivalent to the first leaf sends the
    search back to the node where the two paths split. At every node, a child
    in the same orbit as an explored sibling, under the automorphisms found so
    far that fix the node's path, is skipped.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.first: Optional[Tuple[Tuple[int, ...], List[int], Tuple[int, ...]]] = None
        self.best: Optional[Tuple[Tuple[int, ...], List[int]]] = None
        self.automorphisms: List[Tuple[int, ...]] = []

    def run(self) -> List[int]:
        self._search([0] * self.g.n, ())
        return self.best[1]

    def _search(self, colors: List[int], path: Tuple[int, ...]) -> int:
        """Explore below path; return the depth the search unwinds to."""
        colors = refine(self.g.rows, colors)
        if len(set(colors)) == self.g.n:
            return self._leaf(colors, path)
        explored: List[int] = []
        for v in _target_cell(colors):
            if explored and self._in_explored_orbit(v, explored, path):
                continue
            explored.append(v)
            back = self._search(_individualize(colors, v), path + (v,))
            if back < len(path):
                return back
        return len(path)

    def _leaf(self, colors: List[int], path: Tuple[int, ...]) -> int:
        cert = _certificate(self.g.rows, colors)
        if self.first is None:
            self.first = (cert, colors, path)
            self.best = (cert, colors)
            return len(path)
        if cert == self.first[0]:
            self._record(self.first[1], colors)
            return _common_prefix(path, self.first[2])
        if cert == self.best[0]:
            self._record(self.best[1], colors)
        elif cert > self.best[0]:
            self.best = (cert, colors)
        return len(path)

    def _record(self, earlier: Sequence[int], later: Sequence[int]) -> None:
        position = [0] * self.g.n
        for v, c in enumerate(earlier):
            position[c] = v
        self.automorphisms.append(tuple(position[c] for c in later))

    def _in_explored_orbit(self, v: int, explored: Sequence[int], path: Tuple[int, ...]) -> bool:
        parent = list(range(self.g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if any(gamma[p] != p for p in path):
                continue
            for x, y in enumerate(gamma):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        root = find(v)
        return any(find(u) == root for u in explored)


def canonical_labeling(g: Graph) -> Tuple[int, ...]:
    """labeling[v] is the canonical position of vertex v."""
    if g.n == 0:
        return ()
    return tuple(_LeafSearch(g).run())


def canonical_form(g: Graph) -> Tuple[Tuple[int, ...], str]:
    """Canonical labeling and the graph6 string of the relabeled graph."""
    labeling = canonical_labeling(g)
    return labeling, write_graph6(relabel(g, labeling))


def canonical_string(g: Graph) -> str:
    return canonical_form(g)[1]


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_string(g) == canonical_string(h)
