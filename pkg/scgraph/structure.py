"""
Structure detectors for self-complementary graphs.

- find_induced_c5 / find_skew_partition / find_symmetric_partition
- theorem_m_decompose: case analysis for an antimorphism (a b c d)(long cycle)
- akiyama_harary_check: end-vertices, cut vertices and their skew partition
- symmetric_to_2join_shape: a symmetric partition read as a 2-join
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple, Union

import networkx as nx

from scgraph.antimorphism import is_antimorphism, is_self_complementary
from scgraph.config import Guards, check_guard
from scgraph.errors import (InconsistentWitnessError, InvalidWitnessError, NotSelfComplementaryError,
                            PreconditionError)
from scgraph.graph import (Graph, bits, complement, components, cycle_order, is_induced_c5, mask_of,
                           to_networkx)
from scgraph.p4partition import P4Witness, QuadCycleView, lemma_base
from scgraph.partitions import (ROLES, SkewPartition, SymmetricPartition, verify_skew_partition,
                                verify_symmetric_partition)
from scgraph.permutation import Permutation

C5 = Tuple[int, int, int, int, int]


# -- detectors ----------------------------------------------------------------

def find_induced_c5(g: Graph) -> Optional[C5]:
    """First 5-subset (lexicographic) inducing C5, in cycle order."""
    for five in combinations(range(g.n), 5):
        if is_induced_c5(g, five):
            return cycle_order(g, five)
    return None


def find_skew_partition(g: Graph, max_n: Optional[int] = None) -> Optional[SkewPartition]:
    """Smallest S (as a bitmask) with G[S] disconnected and co-G[V-S] disconnected.

    A is the component of G[S] holding its lowest vertex, C the co-component
    of G[V-S] holding its lowest vertex.
    """
    check_guard(g.n, Guards.from_env().skew_max_n if max_n is None else max_n, "find_skew_partition")
    full = (1 << g.n) - 1
    comp = complement(g)
    for s in range(1, full):
        parts = components(g, s)
        if len(parts) < 2:
            continue
        rest = full & ~s
        co_parts = components(comp, rest)
        if len(co_parts) < 2:
            continue
        return SkewPartition.from_masks(parts[0], s & ~parts[0], co_parts[0], rest & ~co_parts[0])
    return None


# Role bits for the symmetric search.
_A, _B, _C, _D = 1, 2, 4, 8
# role -> (roles forbidden for its neighbours, roles forbidden for its non-neighbours)
_FORBID = {
    _A: (_D, _B),
    _B: (_C, _A),
    _C: (_B, _D),
    _D: (_A, _C),
}


def find_symmetric_partition(g: Graph, max_n: Optional[int] = None) -> Optional[SymmetricPartition]:
    """Backtracking role assignment with vertex 0 in A.

    Swapping (A, B) with (B, A), (C, D) with (D, C) and so on maps symmetric
    partitions to symmetric partitions, so any vertex can be placed in A.
    """
    check_guard(g.n, Guards.from_env().symmetric_max_n if max_n is None else max_n,
                "find_symmetric_partition")
    n = g.n
    if n < 4:
        return None

    def assign(domains: List[int], v: int, role: int) -> Optional[List[int]]:
        seen, unseen = _FORBID[role]
        out = list(domains)
        out[v] = role
        for u in range(v + 1, n):
            out[u] &= ~(seen if g.rows[v] >> u & 1 else unseen)
            if not out[u]:
                return None
        return out

    def search(domains: List[int], v: int, used: int) -> Optional[List[int]]:
        if v == n:
            return domains if used == 0b1111 else None
        missing = 4 - used.bit_count()
        if missing > n - v:
            return None
        for role in (_A, _B, _C, _D):
            if domains[v] & role:
                nxt = assign(domains, v, role)
                if nxt is not None:
                    found = search(nxt, v + 1, used | role)
                    if found is not None:
                        return found
        return None

    start = assign([0b1111] * n, 0, _A)
    result = None if start is None else search(start, 1, _A)
    if result is None:
        return None
    masks = [sum(1 << v for v in range(n) if result[v] == role) for role in (_A, _B, _C, _D)]
    return SymmetricPartition.from_masks(*masks)


def brute_force_skew_partition(g: Graph) -> bool:
    """Exhaustive check over all four-part splits (n <= 8)."""
    full = (1 << g.n) - 1
    for ab in range(1, full):
        low = ab & -ab
        for a in _submasks(ab):
            b = ab & ~a
            if not a & low or not b:
                continue
            if any(g.rows[v] & b for v in bits(a)):
                continue
            cd = full & ~ab
            for c in _submasks(cd):
                d = cd & ~c
                if c and d and all(g.rows[v] & d == d for v in bits(c)):
                    return True
    return False


def brute_force_symmetric_partition(g: Graph) -> bool:
    """Exhaustive check over all four-part splits (n <= 8)."""
    full = (1 << g.n) - 1
    for ab in range(1, full):
        for a in _submasks(ab):
            b = ab & ~a
            if not a or not b or not all(g.rows[v] & b == b for v in bits(a)):
                continue
            cd = full & ~ab
            for c in _submasks(cd):
                d = cd & ~c
                if not c or not d:
                    continue
                if (all(g.rows[v] & d == d for v in bits(c))
                        and not any(g.rows[v] & d for v in bits(a))
                        and not any(g.rows[v] & c for v in bits(b))):
                    return True
    return False


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask
    yield 0


# -- theorem for an antimorphism (a b c d)(long cycle) ------------------------

@dataclass(frozen=True)
class TheoremMOutcome:
    case: int
    kind: str
    witness: Union[C5, SkewPartition, SymmetricPartition]
    antimorphism: Permutation
    note: Optional[str] = None

    def to_json(self) -> dict:
        return {"case": self.case, "kind": self.kind}


# N_a (as a set of role letters) -> case number
_CASES = {
    frozenset('AB'): 1, frozenset('CD'): 2, frozenset('AC'): 3, frozenset('BD'): 4,
    frozenset('AD'): 5, frozenset('BC'): 6, frozenset(): 7, frozenset('ABCD'): 8,
    frozenset('A'): 9, frozenset('BCD'): 10, frozenset('B'): 11, frozenset('ACD'): 12,
    frozenset('C'): 13, frozenset('ABD'): 14, frozenset('D'): 15, frozenset('ABC'): 16,
}

# case -> (part templates); each part is a string of small letters (quad
# vertices) and capital letters (long-cycle tracks)
_SKEW_TEMPLATES = {
    3: ('bd', 'BD', 'ac', 'AC'),
    4: ('ac', 'AC', 'bd', 'BD'),
    8: ('b', 'd', 'ac', 'ABCD'),
    9: ('ac', 'BD', 'bd', 'AC'),
    10: ('bd', 'AC', 'ac', 'BD'),
    11: ('ac', 'AC', 'bd', 'BD'),
    12: ('bd', 'BD', 'ac', 'AC'),
    13: ('ac', 'BD', 'bd', 'AC'),
    14: ('bd', 'AC', 'ac', 'BD'),
    15: ('ac', 'AC', 'bd', 'BD'),
    16: ('bd', 'BD', 'ac', 'AC'),
}

# case -> (symmetric template, apex of the C5 in the witness branch)
_SYMMETRIC_TEMPLATES = {
    1: (('aA', 'bB', 'cC', 'dD'), 'b'),
    2: (('cA', 'dB', 'aC', 'bD'), 'b'),
    5: (('cA', 'dB', 'aC', 'bD'), 'c'),
    6: (('aA', 'bB', 'cC', 'dD'), 'a'),
}


def _edge_pattern_rotation(g: Graph, quad: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """Rotate (a b c d) so the induced edges are exactly ab, ac, cd."""
    for r in range(4):
        a, b, c, d = quad[r:] + quad[:r]
        if (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(c, d)
                and not g.has_edge(b, c) and not g.has_edge(b, d) and not g.has_edge(a, d)):
            return a, b, c, d
    return None


def _split_cycles(t: Permutation):
    cycles = t.cycles().cycles
    if len(cycles) != 2 or 4 not in (len(c) for c in cycles):
        raise PreconditionError(f"{t} is not a 4-cycle times one other cycle")
    quad = next(c for c in cycles if len(c) == 4)
    other = next(c for c in cycles if c is not quad)
    if len(other) != 1 and len(other) % 4:
        raise PreconditionError(f"{t} has a cycle of length {len(other)}")
    return quad, other


def _orient(g: Graph, t: Permutation):
    """Pick t or its inverse so the 4-cycle rotates to the ab, ac, cd pattern."""
    for candidate in (t, t.inverse()):
        quad, other = _split_cycles(candidate)
        rotated = _edge_pattern_rotation(g, quad)
        if rotated is not None:
            return candidate, rotated, other
    raise InconsistentWitnessError(f"4-cycle of {t} induces no P4 in either direction")


class _Layout:
    """Maps template letters to vertex masks for one labeling of the cycles."""

    def __init__(self, quad: Tuple[int, ...], view: QuadCycleView):
        self.small = dict(zip('abcd', quad))
        self.tracks = dict(zip(ROLES, (mask_of(t) for t in view.tracks)))

    def mask(self, letters: str) -> int:
        out = 0
        for ch in letters:
            out |= (1 << self.small[ch]) if ch.islower() else self.tracks[ch]
        return out

    def n_a(self, g: Graph) -> FrozenSet[str]:
        """Roles whose track a sees, after checking all-or-none adjacency."""
        seen = set()
        for v in self.small.values():
            for role, track in self.tracks.items():
                hit = g.rows[v] & track
                if hit and hit != track:
                    raise InconsistentWitnessError(f"vertex {v} splits track {role}")
                if hit and v == self.small['a']:
                    seen.add(role)
        return frozenset(seen)


def theorem_m_decompose(g: Graph, t: Permutation) -> TheoremMOutcome:
    """C5, skew or symmetric partition from an antimorphism (a b c d)(...).

    The long cycle is read as (a_0 b_0 c_0 d_0 ...) with tracks A, B, C, D.
    Case numbers follow N_a, the tracks seen by a; case 0 stands for a
    fixed-point second cycle (g is C5 or the bull).
    """
    if not is_antimorphism(g, t):
        raise InvalidWitnessError(f"{t} is not an antimorphism of the graph")
    t, quad, other = _orient(g, t)

    if len(other) == 1:
        five = find_induced_c5(g)
        if five is not None:
            return _checked(g, TheoremMOutcome(0, 'c5', five, t))
        skew = find_skew_partition(g)
        if skew is None:
            raise InconsistentWitnessError("5-vertex sc-graph with neither C5 nor skew partition")
        return _checked(g, TheoremMOutcome(0, 'skew', skew, t))

    view = QuadCycleView.from_cycle(other)
    layout = _Layout(quad, view)
    case = _CASES[layout.n_a(g)]

    if case in _SKEW_TEMPLATES:
        parts = [layout.mask(p) for p in _SKEW_TEMPLATES[case]]
        return _checked(g, TheoremMOutcome(case, 'skew', SkewPartition.from_masks(*parts), t))

    if case == 7:
        five = (view.a(0),) + quad
        if is_induced_c5(g, five):
            return _checked(g, TheoremMOutcome(case, 'c5', cycle_order(g, five), t))
        found = find_induced_c5(g)
        if found is None:
            raise InconsistentWitnessError(f"case 7 without any induced C5 for {t}")
        note = f"{{a_1, a, b, c, d}} = {sorted(five)} is not a C5; used {list(found)}"
        return _checked(g, TheoremMOutcome(case, 'c5', found, t, note))

    outcome = lemma_base(g, view)
    if isinstance(outcome, P4Witness):
        return _checked(g, TheoremMOutcome(case, 'c5', _witness_c5(g, quad, view, outcome), t))

    for s in range(4):
        shifted = _Layout(quad, view.shifted(s))
        shifted_case = _CASES[shifted.n_a(g)]
        if shifted_case not in _SYMMETRIC_TEMPLATES:
            continue
        template, _ = _SYMMETRIC_TEMPLATES[shifted_case]
        candidate = SymmetricPartition.from_masks(*(shifted.mask(p) for p in template))
        if verify_symmetric_partition(g, candidate):
            return _checked(g, TheoremMOutcome(case, 'symmetric', candidate, t))
    raise InconsistentWitnessError(f"case {case}: no role rotation yields a symmetric partition")


def _witness_c5(g: Graph, quad: Tuple[int, ...], view: QuadCycleView, witness: P4Witness) -> C5:
    """An apex in {a, b, c, d} plus a tau^s-shift of the lemma's quad, else any C5."""
    rotated = view.shifted(4 * witness.rotation)
    positions = {v: p for p, v in enumerate(rotated.cycle)}
    length = len(rotated.cycle)
    for s in range(length):
        moved = [rotated.cycle[(positions[v] + s) % length] for v in witness.cycle]
        for apex in quad:
            five = (apex, *moved)
            if is_induced_c5(g, five):
                return cycle_order(g, five)
    found = find_induced_c5(g)
    if found is None:
        raise InconsistentWitnessError("lemma witness present but the graph has no induced C5")
    return found


def _checked(g: Graph, outcome: TheoremMOutcome) -> TheoremMOutcome:
    w = outcome.witness
    ok = {
        'c5': lambda: is_induced_c5(g, w),
        'skew': lambda: verify_skew_partition(g, w),
        'symmetric': lambda: verify_symmetric_partition(g, w),
    }[outcome.kind]()
    if not ok:
        raise InconsistentWitnessError(f"case {outcome.case} produced an invalid {outcome.kind} witness")
    return outcome


# -- end-vertices and 2-joins ------------------------------------------------

@dataclass(frozen=True)
class AkiyamaHarary:
    end_vertices: Tuple[int, int]
    cut_vertices: Tuple[int, int]
    skew: SkewPartition


def akiyama_harary_check(g: Graph) -> AkiyamaHarary:
    """Two end-vertices b, d, two cut vertices a, c, and ({b}, {d}, {a, c}, rest).

    On P4 the rest is empty and ({b}, {d}, {a}, {c}) is returned instead.
    """
    if not is_self_complementary(g):
        raise NotSelfComplementaryError("graph is not self-complementary")
    ends = tuple(v for v in g.vertices if g.degree(v) == 1)
    if not ends:
        raise PreconditionError("graph has no end-vertex")

    cuts = tuple(sorted(nx.articulation_points(to_networkx(g))))
    if len(ends) != 2 or len(cuts) != 2:
        raise InconsistentWitnessError(f"expected two end-vertices and two cut vertices, got {ends} and {cuts}")

    b, d = ends
    rest = frozenset(g.vertices) - {b, d, *cuts}
    if rest:
        skew = SkewPartition.from_parts({b}, {d}, cuts, rest)
    else:
        skew = SkewPartition.from_parts({b}, {d}, {cuts[0]}, {cuts[1]})
    if not verify_skew_partition(g, skew):
        raise InconsistentWitnessError(f"end-vertex partition {skew} does not verify")
    return AkiyamaHarary((b, d), cuts, skew)


@dataclass(frozen=True)
class TwoJoinShape:
    """(X1, X2) = (a + c, b + d) with (A1, B1, A2, B2) = (a, c, b, d)."""

    x1: FrozenSet[int]
    x2: FrozenSet[int]
    conditions_hold: bool
    components_meet_both: bool
    paths_long_enough: bool


def _is_path_between(g: Graph, x: int, start: int, end: int) -> bool:
    if len(components(g, x)) != 1:
        return False
    degrees = {v: (g.rows[v] & x).bit_count() for v in bits(x)}
    if x.bit_count() == 1:
        return False
    return (degrees[start] == 1 and degrees[end] == 1
            and all(deg == 2 for v, deg in degrees.items() if v not in (start, end)))


def symmetric_to_2join_shape(g: Graph, w: SymmetricPartition) -> TwoJoinShape:
    if not verify_symmetric_partition(g, w):
        raise InvalidWitnessError(f"{w} is not a symmetric partition")
    a, b, c, d = (mask_of(p) for p in w.parts)
    x1, x2 = a | c, b | d
    sides = ((x1, a, c), (x2, b, d))

    cross = [(u, v) for u in bits(x1) for v in bits(g.rows[u] & x2)]
    allowed = all((a >> u & 1 and b >> v & 1) or (c >> u & 1 and d >> v & 1) for u, v in cross)
    required = (all(g.rows[u] & b == b for u in bits(a))
                and all(g.rows[u] & d == d for u in bits(c)))

    meets = all(comp & first and comp & second
                for x, first, second in sides for comp in components(g, x))

    long_enough = True
    for x, first, second in sides:
        if first.bit_count() == 1 and second.bit_count() == 1:
            start, end = next(bits(first)), next(bits(second))
            if _is_path_between(g, x, start, end) and x.bit_count() - 1 < 3:
                long_enough = False

    return TwoJoinShape(frozenset(bits(x1)), frozenset(bits(x2)), allowed and required, meets, long_enough)
