"""
Permutations of 0..n-1 and their cycle decompositions.

Text form is disjoint-cycle notation with fixed points written out, for
instance "(0 1 3 2)(4)". Cycles are normalised with their smallest element
first and listed by that element.
"""

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from scgraph.errors import PermutationError

_CYCLE = re.compile(r'\(([^()]*)\)')


@dataclass(frozen=True)
class Permutation:
    """images[v] is the image of v."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise PermutationError(f"not a bijection on 0..{len(self.images) - 1}: {list(self.images)}")

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for i, v in enumerate(cycle):
                if not 0 <= v < n:
                    raise PermutationError(f"cycle element {v} outside 0..{n - 1}")
                if v in seen:
                    raise PermutationError(f"element {v} appears in two cycles")
                seen.add(v)
                images[v] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        """Parse cycle notation; every element of 0..n-1 must appear."""
        stripped = text.strip()
        if not stripped or _CYCLE.sub('', stripped).strip():
            raise PermutationError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE.findall(stripped):
            try:
                cycle = [int(tok) for tok in body.split()]
            except ValueError:
                raise PermutationError(f"non-integer element in ({body})") from None
            if not cycle:
                raise PermutationError("empty cycle ()")
            cycles.append(cycle)
        n = sum(len(c) for c in cycles)
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def inverse(self) -> 'Permutation':
        inv = [0] * self.n
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def compose(self, other: 'Permutation') -> 'Permutation':
        """self after other: v -> self(other(v))."""
        if other.n != self.n:
            raise PermutationError(f"size mismatch {self.n} vs {other.n}")
        return Permutation(tuple(self.images[w] for w in other.images))

    def power(self, k: int) -> 'Permutation':
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.n)
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    def cycles(self) -> 'CycleDecomposition':
        return cycle_decomposition(self)

    def cycle_type(self) -> List[int]:
        return sorted(len(c) for c in self.cycles().cycles)

    def format(self) -> str:
        return self.cycles().format()

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: Tuple[Tuple[int, ...], ...]

    @property
    def lengths(self) -> List[int]:
        return [len(c) for c in self.cycles]

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(sum(self.lengths), self.cycles)

    def format(self) -> str:
        return ''.join('(' + ' '.join(map(str, c)) + ')' for c in self.cycles)


def cycle_decomposition(t: Permutation) -> CycleDecomposition:
    seen = [False] * t.n
    cycles = []
    for start in range(t.n):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = t.images[v]
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def check_sachs_ringel(c: CycleDecomposition) -> bool:
    """Every cycle length is a multiple of 4, except at most one fixed point."""
    fixed = 0
    for length in c.lengths:
        if length == 1:
            fixed += 1
        elif length % 4:
            return False
    return fixed <= 1


def is_power_of_two(length: int) -> bool:
    return length > 0 and length & (length - 1) == 0
