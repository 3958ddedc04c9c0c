"""Full sweeps over the enumerations up to n = 13 (run with -m slow)."""

import pytest

from scgraph.antimorphism import PowerOfTwoCycles, find_power_of_two_antimorphism, is_antimorphism, iter_antimorphisms
from scgraph.graph import p4_path_order
from scgraph.graph6 import parse_graph6, write_graph6
from scgraph.p4partition import (P4Witness, QuadCycleView, cycle_skew_partition, cycle_symmetric_partition, lemma_base,
                                 p4_partition, verify_p4_partition)
from scgraph.partitions import verify_skew_partition, verify_symmetric_partition
from scgraph.permutation import is_power_of_two
from scgraph.report import conjecture_check
from scgraph.structure import akiyama_harary_check
from strategies import sc_graphs

pytestmark = pytest.mark.slow


@pytest.mark.parametrize('n', [12, 13])
def test_power_of_two_antimorphisms(n):
    for g in sc_graphs(n):
        t = find_power_of_two_antimorphism(g)
        assert is_antimorphism(g, t)
        assert all(is_power_of_two(length) for length in t.cycle_type())


@pytest.mark.parametrize('n', [8, 9, 12, 13])
def test_lemma_base_on_every_power_of_two_cycle(n):
    checked = 0
    for g in sc_graphs(n):
        for t in iter_antimorphisms(g, PowerOfTwoCycles()):
            for cycle in t.cycles().cycles:
                if len(cycle) == 1:
                    continue
                view = QuadCycleView.from_cycle(cycle)
                outcome = lemma_base(g, view)
                if isinstance(outcome, P4Witness):
                    assert p4_path_order(g, outcome.cycle) == outcome.quad
                else:
                    assert verify_symmetric_partition(g, outcome.partition, view.vertices)
                # both raise if the complete-track partitions fail to verify
                cycle_skew_partition(g, view)
                cycle_symmetric_partition(g, view)
                checked += 1
    assert checked > 0


def test_p4_partitions_at_12():
    for g in sc_graphs(12):
        p = p4_partition(g)
        assert verify_p4_partition(g, p)
        assert len(p.quads) == 3 and p.leftover is None


def test_conjecture_at_12():
    reports = [conjecture_check(g) for g in sc_graphs(12)]
    assert len(reports) == 720
    assert not [r.graph for r in reports if r.is_counterexample]


@pytest.mark.parametrize('n', [12, 13])
def test_akiyama_harary_sweep(n):
    for g in sc_graphs(n):
        if 1 in g.degrees():
            result = akiyama_harary_check(g)
            assert verify_skew_partition(g, result.skew)


@pytest.mark.parametrize('n', [12, 13])
def test_graph6_round_trip_sweep(n):
    for g in sc_graphs(n):
        assert parse_graph6(write_graph6(g)) == g
