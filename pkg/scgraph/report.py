"""
Per-graph structure reports and sweep summaries.

A report records which of induced C5 / skew partition / symmetric partition
a self-complementary graph has, plus the case reached by theorem_m_decompose
when the graph has an antimorphism made of a 4-cycle and one other cycle.
Reports serialise to one JSON object per line.
"""

import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import pandas as pd

from scgraph.antimorphism import find_antimorphism_of_type, is_self_complementary
from scgraph.canon import canonical_string
from scgraph.errors import InconsistentWitnessError, NotSelfComplementaryError
from scgraph.graph import Graph, is_induced_c5
from scgraph.partitions import SkewPartition, SymmetricPartition, verify_skew_partition, verify_symmetric_partition
from scgraph.structure import (C5, TheoremMOutcome, find_induced_c5, find_skew_partition,
                               find_symmetric_partition, theorem_m_decompose)


@dataclass(frozen=True)
class StructureReport:
    graph: str
    n: int
    c5: Optional[C5]
    skew: Optional[SkewPartition]
    symmetric: Optional[SymmetricPartition]
    conjecture_holds: bool
    theorem_m: Optional[TheoremMOutcome]
    in_scope: bool

    @property
    def is_counterexample(self) -> bool:
        return self.in_scope and not self.conjecture_holds

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "c5": list(self.c5) if self.c5 is not None else None,
            "skew": self.skew.to_json() if self.skew is not None else None,
            "symmetric": self.symmetric.to_json() if self.symmetric is not None else None,
            "conjecture_holds": self.conjecture_holds,
            "theorem_m": self.theorem_m.to_json() if self.theorem_m is not None else None,
            "in_scope": self.in_scope,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json())


def theorem_m_cycle_type(n: int) -> Optional[List[int]]:
    rest = n - 4
    if rest == 1 or (rest > 0 and rest % 4 == 0):
        return [4, rest]
    return None


def conjecture_check(g: Graph) -> StructureReport:
    """Run the three detectors and, when it applies, the 4-cycle case analysis."""
    if not is_self_complementary(g):
        raise NotSelfComplementaryError("graph is not self-complementary")

    c5 = find_induced_c5(g)
    skew = find_skew_partition(g)
    symmetric = find_symmetric_partition(g)
    if c5 is not None and not is_induced_c5(g, c5):
        raise InconsistentWitnessError(f"detector returned a non-C5 {c5}")
    if skew is not None and not verify_skew_partition(g, skew):
        raise InconsistentWitnessError(f"detector returned an invalid skew partition {skew}")
    if symmetric is not None and not verify_symmetric_partition(g, symmetric):
        raise InconsistentWitnessError(f"detector returned an invalid symmetric partition {symmetric}")

    theorem = None
    cycle_type = theorem_m_cycle_type(g.n)
    if cycle_type is not None:
        t = find_antimorphism_of_type(g, cycle_type)
        if t is not None:
            theorem = theorem_m_decompose(g, t)
            found = {'c5': c5, 'skew': skew, 'symmetric': symmetric}[theorem.kind]
            if found is None:
                raise InconsistentWitnessError(
                    f"case {theorem.case} gives a {theorem.kind} witness the detector missed")

    return StructureReport(
        graph=canonical_string(g),
        n=g.n,
        c5=c5,
        skew=skew,
        symmetric=symmetric,
        conjecture_holds=any(w is not None for w in (c5, skew, symmetric)),
        theorem_m=theorem,
        in_scope=g.n % 4 == 0,
    )


def write_reports(reports: Iterable[StructureReport], path: str) -> int:
    count = 0
    with open(path, 'w', encoding='utf-8') as f:
        for report in reports:
            f.write(report.to_json_line() + '\n')
            count += 1
    return count


def summarize(reports: Sequence[StructureReport]) -> pd.DataFrame:
    """One row per vertex count: how many graphs have each structure."""
    rows = [{
        'n': r.n,
        'c5': r.c5 is not None,
        'skew': r.skew is not None,
        'symmetric': r.symmetric is not None,
        'holds': r.conjecture_holds,
        'theorem_m': r.theorem_m is not None,
        'counterexample': r.is_counterexample,
    } for r in reports]
    columns = ['n', 'c5', 'skew', 'symmetric', 'holds', 'theorem_m', 'counterexample']
    df = pd.DataFrame(rows, columns=columns)
    summary = df.groupby('n').sum().astype(int)
    summary.insert(0, 'graphs', df.groupby('n').size())
    return summary.reset_index()
