"""
Four-part vertex partitions and their verifiers.

  skew:       no edges A-B, all edges C-D
  symmetric:  all edges A-B and C-D, no edges A-D and B-C

Every part must be nonempty and the parts must cover the target vertex set
(all of V(G) unless a subset is given).
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from scgraph.graph import Graph, VertexSet, bits, mask_of

ROLES = ('A', 'B', 'C', 'D')


@dataclass(frozen=True)
class FourPartition:
    a: VertexSet
    b: VertexSet
    c: VertexSet
    d: VertexSet

    @classmethod
    def from_parts(cls, a: Iterable[int], b: Iterable[int], c: Iterable[int], d: Iterable[int]):
        return cls(frozenset(a), frozenset(b), frozenset(c), frozenset(d))

    @classmethod
    def from_masks(cls, a: int, b: int, c: int, d: int):
        return cls.from_parts(bits(a), bits(b), bits(c), bits(d))

    @property
    def parts(self) -> Tuple[VertexSet, VertexSet, VertexSet, VertexSet]:
        return self.a, self.b, self.c, self.d

    def to_json(self) -> Dict[str, List[int]]:
        return {role: sorted(part) for role, part in zip(ROLES, self.parts)}

    def __str__(self) -> str:
        return ' | '.join(f"{role}={sorted(part)}" for role, part in zip(ROLES, self.parts))


class SkewPartition(FourPartition):
    """No edges between a and b; every edge between c and d."""


class SymmetricPartition(FourPartition):
    """a complete to b, c complete to d, a anticomplete to d, b anticomplete to c."""


def _complete(g: Graph, x: int, y: int) -> bool:
    return all(g.rows[v] & y == y for v in bits(x))


def _anticomplete(g: Graph, x: int, y: int) -> bool:
    return all(not g.rows[v] & y for v in bits(x))


def _part_masks(g: Graph, w: FourPartition, within: Optional[Iterable[int]]) -> Optional[List[int]]:
    """Part masks if the parts are nonempty, disjoint and cover the target set."""
    target = (1 << g.n) - 1 if within is None else mask_of(within)
    masks = []
    seen = 0
    for part in w.parts:
        if not part or any(not 0 <= v < g.n for v in part):
            return None
        mask = mask_of(part)
        if mask & seen:
            return None
        seen |= mask
        masks.append(mask)
    return masks if seen == target else None


def verify_skew_partition(g: Graph, w: FourPartition, within: Optional[Iterable[int]] = None) -> bool:
    """Check w as a skew partition of G[within] (default: all of G)."""
    masks = _part_masks(g, w, within)
    if masks is None:
        return False
    a, b, c, d = masks
    return _anticomplete(g, a, b) and _complete(g, c, d)


def verify_symmetric_partition(g: Graph, w: FourPartition, within: Optional[Iterable[int]] = None) -> bool:
    """Check w as a symmetric partition of G[within] (default: all of G)."""
    masks = _part_masks(g, w, within)
    if masks is None:
        return False
    a, b, c, d = masks
    return (_complete(g, a, b) and _complete(g, c, d)
            and _anticomplete(g, a, d) and _anticomplete(g, b, c))
