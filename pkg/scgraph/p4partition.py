"""
Partition of a self-complementary graph into disjoint induced P4s.

Every cycle of length 4k of an antimorphism tau is read as
(a_0 b_0 c_0 d_0 a_1 b_1 c_1 d_1 ... a_{k-1} b_{k-1} c_{k-1} d_{k-1}),
indices taken mod k, with tracks A, B, C, D. lemma_base then either finds
a symmetric partition of the cycle's vertices (each {a_i, b_i, c_i, d_i}
is then an induced P4) or a quad {a_0, b_i, a_j, b_{i+j}} on which
(a_0 b_i a_j b_{i+j}) acts as an antimorphism. In the second case the
tau^4 shifts of that quad, paired up along Z_k, cover A and B, and their
tau^2 images cover C and D.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple, Union

from scgraph.antimorphism import find_power_of_two_antimorphism, is_antimorphism
from scgraph.errors import InconsistentWitnessError, InvalidWitnessError, VertexError
from scgraph.graph import Graph, VertexSet, check_vertices, complement, induced_subgraph, mask_of, p4_path_order
from scgraph.partitions import SkewPartition, SymmetricPartition, verify_skew_partition, verify_symmetric_partition
from scgraph.permutation import Permutation, is_power_of_two

Quad = Tuple[int, int, int, int]


@dataclass(frozen=True)
class QuadCycleView:
    """One antimorphism cycle of length 4k split into four tracks."""

    cycle: Tuple[int, ...]

    def __post_init__(self):
        if not self.cycle or len(self.cycle) % 4:
            raise VertexError(f"cycle length must be a positive multiple of 4, got {len(self.cycle)}")
        if len(set(self.cycle)) != len(self.cycle):
            raise VertexError(f"repeated vertex in cycle {self.cycle}")

    @classmethod
    def from_cycle(cls, cycle) -> 'QuadCycleView':
        return cls(tuple(cycle))

    @property
    def k(self) -> int:
        return len(self.cycle) // 4

    def _at(self, track: int, i: int) -> int:
        return self.cycle[4 * (i % self.k) + track]

    def a(self, i: int) -> int:
        return self._at(0, i)

    def b(self, i: int) -> int:
        return self._at(1, i)

    def c(self, i: int) -> int:
        return self._at(2, i)

    def d(self, i: int) -> int:
        return self._at(3, i)

    def track(self, index: int) -> VertexSet:
        return frozenset(self._at(index, i) for i in range(self.k))

    @property
    def tracks(self) -> Tuple[VertexSet, VertexSet, VertexSet, VertexSet]:
        return self.track(0), self.track(1), self.track(2), self.track(3)

    @property
    def vertices(self) -> VertexSet:
        return frozenset(self.cycle)

    def shifted(self, s: int) -> 'QuadCycleView':
        """The same cycle read from s positions later."""
        s %= len(self.cycle)
        return QuadCycleView(self.cycle[s:] + self.cycle[:s])


def check_cycle(g: Graph, view: QuadCycleView) -> None:
    """The cycle, read as a permutation of its own vertices, must be an antimorphism of G[cycle]."""
    check_vertices(g, view.cycle)
    sub, mapping = induced_subgraph(g, view.cycle)
    position = {v: i for i, v in enumerate(mapping)}
    images = [0] * len(mapping)
    for p, v in enumerate(view.cycle):
        images[position[v]] = position[view.cycle[(p + 1) % len(view.cycle)]]
    if not is_antimorphism(sub, Permutation(tuple(images))):
        raise InvalidWitnessError(f"cycle {view.cycle} is not part of an antimorphism of the graph")


def _track_complete(g: Graph, x: VertexSet, y: VertexSet) -> bool:
    y_mask = mask_of(y)
    return all(g.rows[v] & y_mask == y_mask for v in x)


def cycle_symmetric_partition(g: Graph, view: QuadCycleView) -> Optional[SymmetricPartition]:
    """(A, B, C, D) as a symmetric partition of G[cycle] when A is complete to B."""
    check_cycle(g, view)
    a, b, c, d = view.tracks
    if not _track_complete(g, a, b):
        return None
    w = SymmetricPartition(a, b, c, d)
    if not verify_symmetric_partition(g, w, view.vertices):
        raise InconsistentWitnessError(f"tracks of {view.cycle} do not form a symmetric partition")
    return w


def cycle_skew_partition(g: Graph, view: QuadCycleView) -> Optional[SkewPartition]:
    """(B, D, C, A) as a skew partition of G[cycle] when A is complete to C."""
    check_cycle(g, view)
    a, b, c, d = view.tracks
    if not _track_complete(g, a, c):
        return None
    w = SkewPartition(b, d, c, a)
    if not verify_skew_partition(g, w, view.vertices):
        raise InconsistentWitnessError(f"tracks of {view.cycle} do not form a skew partition")
    return w


def _quad_cycle_ok(g: Graph, cycle: Quad) -> bool:
    """cycle (w x y z) is an antimorphism of the P4 induced by its vertices."""
    if len(set(cycle)) != 4 or p4_path_order(g, cycle) is None:
        return False
    try:
        check_cycle(g, QuadCycleView(cycle))
    except InvalidWitnessError:
        return False
    return True


@dataclass(frozen=True)
class GibbsWitness:
    """Quad {a_0, b_0, a_i, b_i} (branch 'a') or {a_0, b_0, c_i, d_i} (branch 'c')."""

    branch: str
    i: int
    cycle: Quad
    quad: Quad


def lemma_gibbs(g: Graph, view: QuadCycleView) -> GibbsWitness:
    """First i >= 1 with a_0 seeing b_i or d_i, in g or in its complement."""
    check_cycle(g, view)
    a0, b0 = view.a(0), view.b(0)
    h = complement(g) if g.has_edge(a0, b0) else g
    for i in range(1, view.k + 1):
        if h.has_edge(a0, view.b(i)):
            branch, cycle = 'a', (a0, b0, view.a(i), view.b(i))
        elif h.has_edge(a0, view.d(i)):
            branch, cycle = 'c', (a0, b0, view.c(i), view.d(i))
        else:
            continue
        if not _quad_cycle_ok(g, cycle):
            raise InconsistentWitnessError(f"Gibbs scan produced {cycle}, which is not a P4 antimorphism")
        return GibbsWitness(branch, i % view.k, cycle, p4_path_order(g, cycle))
    raise InconsistentWitnessError(f"Gibbs scan found no index on cycle {view.cycle}")


@dataclass(frozen=True)
class SymmetricABCD:
    view: QuadCycleView

    @property
    def partition(self) -> SymmetricPartition:
        return SymmetricPartition(*self.view.tracks)


@dataclass(frozen=True)
class SymmetricBCDA:
    view: QuadCycleView

    @property
    def partition(self) -> SymmetricPartition:
        a, b, c, d = self.view.tracks
        return SymmetricPartition(b, c, d, a)


@dataclass(frozen=True)
class P4Witness:
    """Quad {a_0, b_i, a_j, b_{i+j}} on the cycle restarted at a_h.

    central_edge is 'a' when a_0 a_j is the middle edge of the path, 'b' when
    b_i b_{i+j} is.
    """

    rotation: int
    i: int
    j: int
    cycle: Quad
    quad: Quad
    central_edge: str


LemmaBaseOutcome = Union[P4Witness, SymmetricABCD, SymmetricBCDA]


def lemma_base(g: Graph, view: QuadCycleView) -> LemmaBaseOutcome:
    check_cycle(g, view)
    b_mask = mask_of(view.track(1))
    if _track_complete(g, view.track(0), view.track(1)):
        outcome: LemmaBaseOutcome = SymmetricABCD(view)
    elif all(not g.rows[v] & b_mask for v in view.track(0)):
        outcome = SymmetricBCDA(view)
    else:
        outcome = _mixed_witness(g, view, b_mask)
        if not _quad_cycle_ok(g, outcome.cycle):
            raise InconsistentWitnessError(f"lemma produced {outcome.cycle}, which is not a P4 antimorphism")
        return outcome

    if not verify_symmetric_partition(g, outcome.partition, view.vertices):
        raise InconsistentWitnessError(f"{type(outcome).__name__} does not verify on cycle {view.cycle}")
    return outcome


def _mixed_witness(g: Graph, view: QuadCycleView, b_mask: int) -> P4Witness:
    k = view.k
    h = next(h for h in range(k) if 0 < (g.rows[view.a(h)] & b_mask).bit_count() < k)
    rotated = view.shifted(4 * h)
    a0 = rotated.a(0)
    seen = (g.rows[a0] & b_mask).bit_count()
    work = g if seen >= k - seen else complement(g)

    i = next(i for i in range(k) if not work.has_edge(a0, rotated.b(i)))
    for j in range(1, k):
        if work.has_edge(a0, rotated.b(i - j)) and work.has_edge(a0, rotated.b(i + j)):
            break
    else:
        raise InconsistentWitnessError(f"no shift j around b_{i} on cycle {rotated.cycle}")

    cycle = (a0, rotated.b(i), rotated.a(j), rotated.b(i + j))
    if len(set(cycle)) != 4:
        raise InconsistentWitnessError(f"degenerate quad {cycle}")
    quad = p4_path_order(g, cycle)
    if quad is None:
        raise InconsistentWitnessError(f"quad {cycle} does not induce a P4")
    central = 'a' if g.has_edge(a0, rotated.a(j)) else 'b'
    return P4Witness(h, i % k, j, cycle, quad, central)


@dataclass(frozen=True)
class PairPartition:
    alpha: int
    j: int
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def modulus(self) -> int:
        return 1 << self.alpha


def verify_pair_partition(p: PairPartition) -> bool:
    m = p.modulus
    covered = [l for pair in p.pairs for l in pair]
    return (sorted(covered) == list(range(m))
            and all((l + p.j) % m == r for l, r in p.pairs))


def zmod_pair_partition(alpha: int, j: int) -> PairPartition:
    """Split Z_{2^alpha} into pairs (l, l + j)."""
    if alpha < 1:
        raise ValueError(f"alpha must be at least 1, got {alpha}")
    m = 1 << alpha
    if j % m == 0:
        raise ValueError(f"j={j} is 0 modulo {m}")
    j %= m
    if alpha == 1:
        return PairPartition(alpha, j, ((0, 1),))
    if j % 2 == 0:
        half = zmod_pair_partition(alpha - 1, j // 2)
        pairs = []
        for l, _ in half.pairs:
            pairs.append((2 * l, (2 * l + j) % m))
            pairs.append((2 * l + 1, (2 * l + 1 + j) % m))
        return PairPartition(alpha, j, tuple(pairs))
    walk = [(1 + t * j) % m for t in range(m)]
    return PairPartition(alpha, j, tuple((walk[t], walk[t + 1]) for t in range(0, m, 2)))


@dataclass(frozen=True)
class P4Partition:
    quads: Tuple[Quad, ...]
    leftover: Optional[int] = None

    def to_json(self) -> dict:
        return {"quads": [list(q) for q in self.quads], "leftover": self.leftover}


def verify_p4_partition(g: Graph, p: P4Partition) -> bool:
    """Quads plus leftover partition V(g) and every quad induces a P4."""
    vertices = [v for quad in p.quads for v in quad]
    if p.leftover is not None:
        vertices.append(p.leftover)
    try:
        check_vertices(g, vertices)
    except VertexError:
        return False
    if len(vertices) != g.n:
        return False
    return all(len(quad) == 4 and p4_path_order(g, quad) is not None for quad in p.quads)


def _ordered(g: Graph, quad) -> Quad:
    ordered = p4_path_order(g, quad)
    if ordered is None:
        raise InconsistentWitnessError(f"quad {sorted(quad)} does not induce a P4")
    return ordered


def _cycle_quads(g: Graph, view: QuadCycleView) -> List[Quad]:
    outcome = lemma_base(g, view)
    if isinstance(outcome, (SymmetricABCD, SymmetricBCDA)):
        return [_ordered(g, (view.a(i), view.b(i), view.c(i), view.d(i))) for i in range(view.k)]

    k = view.k
    alpha = k.bit_length() - 1
    if k != 1 << alpha:
        raise InconsistentWitnessError(f"cycle length {4 * k} is not a power of 2")
    rotated = view.shifted(4 * outcome.rotation)
    i, j = outcome.i, outcome.j
    quads = []
    for l, _ in zmod_pair_partition(alpha, j).pairs:
        quads.append(_ordered(g, (rotated.a(l), rotated.b(l + i), rotated.a(l + j), rotated.b(l + i + j))))
        quads.append(_ordered(g, (rotated.c(l), rotated.d(l + i), rotated.c(l + j), rotated.d(l + i + j))))
    return quads


def p4_partition(g: Graph, tau: Optional[Permutation] = None) -> P4Partition:
    """Partition an sc-graph into floor(n/4) induced P4s plus at most one vertex.

    tau defaults to a power-of-2 antimorphism; a supplied one must have
    power-of-2 cycle lengths.
    """
    if tau is None:
        tau = find_power_of_two_antimorphism(g)
    elif not is_antimorphism(g, tau):
        raise InvalidWitnessError(f"{tau} is not an antimorphism of the graph")
    else:
        lengths = tau.cycle_type()
        if not all(is_power_of_two(length) for length in lengths):
            raise InvalidWitnessError(f"{tau} has cycle lengths {lengths}, not all powers of 2")

    quads: List[Quad] = []
    leftover = None
    for cycle in tau.cycles().cycles:
        if len(cycle) == 1:
            if leftover is not None:
                raise InvalidWitnessError(f"{tau} has more than one fixed point")
            leftover = cycle[0]
            continue
        quads.extend(_cycle_quads(g, QuadCycleView.from_cycle(cycle)))

    result = P4Partition(tuple(quads), leftover)
    if not verify_p4_partition(g, result):
        raise InconsistentWitnessError(f"P4 partition failed verification: {result}")
    return result


def max_disjoint_induced_p4s(g: Graph) -> List[Quad]:
    """Largest family of disjoint induced P4s, by exhaustive search (tiny n)."""
    candidates = []
    for four in combinations(range(g.n), 4):
        ordered = p4_path_order(g, four)
        if ordered is not None:
            candidates.append((mask_of(four), ordered))

    best: List[Quad] = []

    def extend(start: int, used: int, chosen: List[Quad]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + (g.n - used.bit_count()) // 4 <= len(best):
            return
        for index in range(start, len(candidates)):
            mask, quad = candidates[index]
            if not mask & used:
                chosen.append(quad)
                extend(index + 1, used | mask, chosen)
                chosen.pop()

    extend(0, 0, [])
    return best
