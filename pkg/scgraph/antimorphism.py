"""
Antimorphisms: isomorphisms from G onto its complement.

The search builds an isomorphism G -> complement(G) vertex by vertex
(0, 1, ..., n-1), trying images in increasing order, so the first solution
is the one with the lexicographically least images array. Candidate images
are restricted by a joint colour refinement of G and its complement, and
every partial assignment is checked pairwise. Optional cycle budgets prune
by cycle structure while the permutation is being built.
"""

from collections import Counter
from typing import Iterable, Iterator, List, Optional

from scgraph.canon import canonical_string, refine
from scgraph.errors import InconsistentWitnessError, NotSelfComplementaryError, PermutationError
from scgraph.graph import Graph, bits, complement
from scgraph.permutation import Permutation, check_sachs_ringel, is_power_of_two


def _mapped_row(row: int, t: Permutation) -> int:
    image = 0
    for u in bits(row):
        image |= 1 << t.images[u]
    return image


def is_antimorphism(g: Graph, t: Permutation) -> bool:
    """True iff every edge maps to a non-edge and every non-edge to an edge."""
    if t.n != g.n:
        raise PermutationError(f"permutation on {t.n} points for a graph on {g.n} vertices")
    full = (1 << g.n) - 1
    for v, row in enumerate(g.rows):
        w = t.images[v]
        if _mapped_row(row, t) != full & ~g.rows[w] & ~(1 << w):
            return False
    return True


def is_automorphism(g: Graph, t: Permutation) -> bool:
    if t.n != g.n:
        raise PermutationError(f"permutation on {t.n} points for a graph on {g.n} vertices")
    return all(_mapped_row(row, t) == g.rows[t.images[v]] for v, row in enumerate(g.rows))


def is_self_complementary(g: Graph) -> bool:
    if g.edge_count * 4 != g.n * (g.n - 1):
        return False
    return canonical_string(g) == canonical_string(complement(g))


class CycleBudget:
    """Accepts every cycle structure."""

    def close(self, length: int) -> bool:
        return True

    def reopen(self, length: int) -> None:
        pass

    def open_ok(self, length: int) -> bool:
        return True


class PowerOfTwoCycles(CycleBudget):
    def close(self, length: int) -> bool:
        return is_power_of_two(length)


class TypedCycles(CycleBudget):
    """Cycles must use up exactly the given multiset of lengths."""

    def __init__(self, cycle_type: Iterable[int]):
        self.remaining = Counter(cycle_type)

    def close(self, length: int) -> bool:
        if self.remaining[length] <= 0:
            return False
        self.remaining[length] -= 1
        return True

    def reopen(self, length: int) -> None:
        self.remaining[length] += 1

    def open_ok(self, length: int) -> bool:
        return any(count > 0 and size >= length for size, count in self.remaining.items())


def _candidate_images(g: Graph, comp: Graph) -> List[List[int]]:
    n = g.n
    union = list(g.rows) + [row << n for row in comp.rows]
    colors = refine(union, [0] * (2 * n))
    return [[w for w in range(n) if colors[n + w] == colors[v]] for v in range(n)]


def iter_antimorphisms(g: Graph, budget: Optional[CycleBudget] = None) -> Iterator[Permutation]:
    """Yield every antimorphism of g accepted by budget, lexicographically."""
    budget = budget or CycleBudget()
    n = g.n
    comp = complement(g)
    if not is_self_complementary(g):
        return
    allowed = _candidate_images(g, comp)
    images = [-1] * n
    preimage = [-1] * n

    def consistent(v: int, w: int) -> bool:
        row_v = g.rows[v]
        row_w = g.rows[w]
        for u in range(v):
            if (row_v >> u & 1) == (row_w >> images[u] & 1):
                return False
        return True

    def chain(v: int):
        """Return (closed, length) for the chain through v."""
        length = 1
        x = images[v]
        while x != v and images[x] != -1:
            x = images[x]
            length += 1
        if x == v:
            return True, length
        back = 0
        y = preimage[v]
        while y != -1:
            back += 1
            y = preimage[y]
        return False, back + length + 1

    def extend(v: int) -> Iterator[Permutation]:
        if v == n:
            yield Permutation(tuple(images))
            return
        for w in allowed[v]:
            if preimage[w] != -1 or not consistent(v, w):
                continue
            images[v] = w
            preimage[w] = v
            closed, length = chain(v)
            if closed:
                if budget.close(length):
                    yield from extend(v + 1)
                    budget.reopen(length)
            elif budget.open_ok(length):
                yield from extend(v + 1)
            images[v] = -1
            preimage[w] = -1

    yield from extend(0)


def find_antimorphism(g: Graph) -> Optional[Permutation]:
    """Lexicographically least antimorphism, or None if g is not sc."""
    t = next(iter_antimorphisms(g), None)
    if t is not None and not (is_antimorphism(g, t) and check_sachs_ringel(t.cycles())):
        raise InconsistentWitnessError(f"search returned a non-antimorphism {t}")
    return t


def find_power_of_two_antimorphism(g: Graph) -> Permutation:
    """An antimorphism whose cycle lengths are all powers of 2.

    Such an antimorphism exists for every self-complementary graph, so not
    finding one is reported as an internal inconsistency.
    """
    if not is_self_complementary(g):
        raise NotSelfComplementaryError("graph is not self-complementary")
    t = next(iter_antimorphisms(g, PowerOfTwoCycles()), None)
    if t is None:
        raise InconsistentWitnessError("self-complementary graph without a power-of-2 antimorphism")
    if not is_antimorphism(g, t) or not all(is_power_of_two(c) for c in t.cycles().lengths):
        raise InconsistentWitnessError(f"search returned an invalid power-of-2 antimorphism {t}")
    return t


def find_antimorphism_of_type(g: Graph, cycle_type: Iterable[int]) -> Optional[Permutation]:
    """First antimorphism whose cycle lengths are exactly cycle_type (any order)."""
    cycle_type = list(cycle_type)
    if sum(cycle_type) != g.n:
        return None
    t = next(iter_antimorphisms(g, TypedCycles(cycle_type)), None)
    if t is not None and (not is_antimorphism(g, t) or t.cycle_type() != sorted(cycle_type)):
        raise InconsistentWitnessError(f"search returned {t}, not of type {sorted(cycle_type)}")
    return t
