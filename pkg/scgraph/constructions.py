"""
Generators of self-complementary graphs.

- p4_construction / j_construction: four blocks joined in a path.
- enumerate_sc_graphs: one graph per isomorphism class on n vertices.

Enumeration works per antimorphism cycle type. For a fixed permutation
sigma of that type, the unordered pairs split into sigma-orbits of even
length, and sigma is an antimorphism exactly when edges alternate along
every orbit; one bit per orbit (is the representative an edge?) therefore
describes the whole family. Permutations commuting with sigma map the family
onto itself, so only the least code of each centraliser orbit is
canonicalised.
"""

from dataclasses import dataclass
from itertools import permutations, product
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from scgraph.antimorphism import is_antimorphism, is_self_complementary
from scgraph.canon import canonical_form, canonical_string
from scgraph.config import Guards, check_guard
from scgraph.errors import InconsistentWitnessError, VertexError
from scgraph.graph import Graph, complement, relabel
from scgraph.permutation import Permutation

Pair = Tuple[int, int]


# -- block constructions ------------------------------------------------------

def _join_blocks(blocks: Sequence[Graph]) -> Tuple[Graph, List[int]]:
    """Disjoint union of blocks with consecutive blocks completely joined."""
    offsets = []
    total = 0
    for block in blocks:
        offsets.append(total)
        total += block.n
    rows = [0] * total
    for index, (block, offset) in enumerate(zip(blocks, offsets)):
        joined = 0
        for neighbour in (index - 1, index + 1):
            if 0 <= neighbour < len(blocks):
                joined |= ((1 << blocks[neighbour].n) - 1) << offsets[neighbour]
        for v, row in enumerate(block.rows):
            rows[offset + v] = (row << offset) | joined
    return Graph(total, tuple(rows)), offsets


def p4_construction(g: Graph) -> Tuple[Graph, Permutation]:
    """Blocks [G1 | G3 | G4 | G2] = [g | co-g | co-g | g], joined in a path.

    The returned antimorphism sends v in G1 -> G3 -> G2 -> G4 -> G1.
    """
    m = g.n
    comp = complement(g)
    result, _ = _join_blocks([g, comp, comp, g])
    images = [0] * (4 * m)
    for v in range(m):
        images[v] = m + v
        images[m + v] = 3 * m + v
        images[3 * m + v] = 2 * m + v
        images[2 * m + v] = v
    tau = Permutation(tuple(images))
    if not is_antimorphism(result, tau):
        raise InconsistentWitnessError("P4-construction antimorphism failed verification")
    return result, tau


def j_construction(g: Graph, h: Graph) -> Graph:
    """Blocks [G1 | H1 | H2 | G2] = [g | co-h | co-h | g], joined in a path.

    Self-complementary exactly when g and h are isomorphic.
    """
    comp = complement(h)
    result, _ = _join_blocks([g, comp, comp, g])
    return result


# -- cycle types and pair orbits ---------------------------------------------

def _partitions(m: int, largest: Optional[int] = None) -> Iterator[List[int]]:
    largest = m if largest is None else largest
    if m == 0:
        yield []
        return
    for part in range(min(m, largest), 0, -1):
        for rest in _partitions(m - part, part):
            yield [part] + rest


def sachs_ringel_cycle_types(n: int) -> List[List[int]]:
    """Cycle types allowed for an antimorphism on n vertices, longest first."""
    if n % 4 == 0:
        return [[4 * p for p in parts] for parts in _partitions(n // 4)]
    if n % 4 == 1:
        return [[4 * p for p in parts] + [1] for parts in _partitions(n // 4)]
    return []


def standard_permutation(cycle_type: Sequence[int]) -> Permutation:
    """Cycles laid out on consecutive vertices in the given order."""
    cycles = []
    start = 0
    for length in cycle_type:
        cycles.append(list(range(start, start + length)))
        start += length
    return Permutation.from_cycles(start, cycles)


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def pair_orbits(sigma: Permutation) -> List[Tuple[Pair, ...]]:
    """Orbits of sigma on unordered pairs, each listed from its least pair."""
    seen = set()
    orbits = []
    for u in range(sigma.n):
        for v in range(u + 1, sigma.n):
            if (u, v) in seen:
                continue
            orbit = []
            pair = (u, v)
            while pair not in seen:
                seen.add(pair)
                orbit.append(pair)
                pair = _pair(sigma(pair[0]), sigma(pair[1]))
            orbits.append(tuple(orbit))
    return orbits


def decode_orbit_bits(n: int, orbits: Sequence[Tuple[Pair, ...]], code: int) -> Graph:
    """Graph in which orbit o's pair at position t is an edge iff bit_o xor (t odd)."""
    rows = [0] * n
    for o, orbit in enumerate(orbits):
        bit = code >> o & 1
        for t, (u, v) in enumerate(orbit):
            if bit ^ (t & 1):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class OrbitChoice:
    """One edge/non-edge bit per sigma-orbit of pairs."""

    sigma: Permutation
    orbit_reps: Tuple[Pair, ...]
    bits: Tuple[bool, ...]

    @classmethod
    def from_code(cls, sigma: Permutation, code: int) -> 'OrbitChoice':
        orbits = pair_orbits(sigma)
        return cls(sigma, tuple(o[0] for o in orbits),
                   tuple(bool(code >> i & 1) for i in range(len(orbits))))

    def decode(self) -> Graph:
        orbits = pair_orbits(self.sigma)
        code = sum(1 << i for i, bit in enumerate(self.bits) if bit)
        return decode_orbit_bits(self.sigma.n, orbits, code)


# -- centraliser reduction ----------------------------------------------------

def _centralizer(sigma: Permutation) -> Iterator[Tuple[int, ...]]:
    """Every permutation commuting with sigma, as an images tuple."""
    cycles = [c for c in sigma.cycles().cycles]
    by_length: Dict[int, List[Tuple[int, ...]]] = {}
    for cycle in cycles:
        by_length.setdefault(len(cycle), []).append(cycle)
    groups = sorted(by_length.items())

    choices = []
    for length, group in groups:
        options = []
        for order in permutations(range(len(group))):
            for shifts in product(range(length), repeat=len(group)):
                options.append((order, shifts))
        choices.append(options)

    for picked in product(*choices):
        images = [0] * sigma.n
        for (length, group), (order, shifts) in zip(groups, picked):
            for i, cycle in enumerate(group):
                target = group[order[i]]
                for p, v in enumerate(cycle):
                    images[v] = target[(p + shifts[i]) % length]
        yield tuple(images)


def _orbit_actions(sigma: Permutation, orbits: Sequence[Tuple[Pair, ...]]):
    """Each centraliser element as (target orbit per bit, xor mask)."""
    where = {}
    for o, orbit in enumerate(orbits):
        for t, pair in enumerate(orbit):
            where[pair] = (o, t)
    for c in _centralizer(sigma):
        targets = []
        flips = 0
        for orbit in orbits:
            u, v = orbit[0]
            o_image, shift = where[_pair(c[u], c[v])]
            targets.append(o_image)
            if shift & 1:
                flips |= 1 << o_image
        yield targets, flips


def _least_codes(sigma: Permutation, orbits: Sequence[Tuple[Pair, ...]]) -> np.ndarray:
    """Codes that are least in their centraliser orbit."""
    m = len(orbits)
    codes = np.arange(1 << m, dtype=np.int64)
    least = codes.copy()
    chunks = [(shift, min(8, m - shift)) for shift in range(0, m, 8)]
    for targets, flips in _orbit_actions(sigma, orbits):
        image = np.zeros_like(codes)
        for shift, width in chunks:
            values = np.arange(1 << width, dtype=np.int64)
            table = np.zeros(1 << width, dtype=np.int64)
            for b in range(width):
                table |= ((values >> b) & 1) << targets[shift + b]
            image |= table[(codes >> shift) & ((1 << width) - 1)]
        np.minimum(least, image ^ flips, out=least)
    return np.flatnonzero(least == codes)


def _family_classes(cycle_type: Sequence[int]) -> Dict[str, Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """canonical graph6 -> (canonical rows, relabeled antimorphism) for one type."""
    sigma = standard_permutation(cycle_type)
    orbits = pair_orbits(sigma)
    found = {}
    for code in _least_codes(sigma, orbits):
        g = decode_orbit_bits(sigma.n, orbits, int(code))
        labeling, key = canonical_form(g)
        if key in found:
            continue
        images = [0] * sigma.n
        for v in range(sigma.n):
            images[labeling[v]] = labeling[sigma(v)]
        found[key] = (relabel(g, labeling).rows, tuple(images))
    return found


def enumerate_with_antimorphisms(n: int, max_n: Optional[int] = None, jobs: int = 1,
                                 progress: bool = False) -> List[Tuple[Graph, Permutation]]:
    """Canonical sc-graphs on n vertices, each with a verified antimorphism.

    Sorted by canonical graph6 string.
    """
    if n < 0:
        raise VertexError(f"vertex count must be non-negative, got {n}")
    limit = Guards.from_env().enum_max_n if max_n is None else max_n
    check_guard(n, limit, "enumerate_sc_graphs")
    types = sachs_ringel_cycle_types(n)
    if n == 0:
        return [(Graph.empty(0), Permutation.identity(0))]
    if not types:
        return []

    if jobs > 1 and len(types) > 1:
        with Pool(processes=min(jobs, len(types))) as pool:
            families = list(tqdm(pool.imap(_family_classes, types), total=len(types),
                                 desc=f"Cycle types n={n}", disable=not progress))
    else:
        families = [_family_classes(t) for t in tqdm(types, desc=f"Cycle types n={n}",
                                                     disable=not progress)]

    merged = {}
    for family in families:
        for key, value in family.items():
            merged.setdefault(key, value)

    out = []
    for key in sorted(merged):
        rows, images = merged[key]
        g = Graph(n, rows)
        tau = Permutation(images)
        if not is_antimorphism(g, tau):
            raise InconsistentWitnessError(f"enumerated graph {key} lost its antimorphism")
        out.append((g, tau))
    return out


def enumerate_sc_graphs(n: int, max_n: Optional[int] = None, jobs: int = 1,
                        progress: bool = False) -> List[Graph]:
    """One representative per isomorphism class of sc-graphs on n vertices."""
    return [g for g, _ in enumerate_with_antimorphisms(n, max_n=max_n, jobs=jobs, progress=progress)]


def brute_force_sc_graphs(n: int) -> List[Graph]:
    """Filter all labeled graphs on n vertices (tiny n only)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    found = {}
    for code in range(1 << len(pairs)):
        g = Graph.from_edges(n, (p for i, p in enumerate(pairs) if code >> i & 1))
        if is_self_complementary(g):
            found.setdefault(canonical_string(g), g)
    return [found[key] for key in sorted(found)]
