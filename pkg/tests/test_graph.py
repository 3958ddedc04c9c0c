import networkx as nx
import pytest
from hypothesis import given

from scgraph.errors import VertexError
from scgraph.graph import (Graph, check_vertices, complement, components, cycle_order, induced_subgraph,
                           from_networkx, is_induced_c5, is_induced_p4, mask_of, p4_path_order, relabel,
                           to_networkx)
from strategies import graphs


def test_from_edges_builds_symmetric_rows(p4):
    assert p4.rows == (0b0010, 0b0101, 0b1010, 0b0100)
    assert list(p4.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert p4.edge_count == 3


@pytest.mark.parametrize('rows, n', [
    ((0b01,), 1),          # loop
    ((0b10, 0b00), 2),     # asymmetric
    ((0b100, 0, 0b001), 2),  # wrong row count
    ((0b1000, 0, 0), 3),   # out of range
])
def test_invalid_rows_rejected(rows, n):
    with pytest.raises(VertexError):
        Graph(n, rows)


def test_from_edges_rejects_bad_edges():
    with pytest.raises(VertexError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(VertexError):
        Graph.from_edges(3, [(1, 1)])


def test_neighbourhoods(bull):
    assert bull.neighbors(1) == {0, 2, 3}
    assert bull.non_neighbors(1) == {1, 4}
    assert bull.degrees() == [1, 3, 2, 3, 1]


def test_triangles(p4, c5, k4, bull):
    assert p4.is_triangle_free()
    assert c5.is_triangle_free()
    assert Graph.empty(1).is_triangle_free()
    assert k4.has_triangle()
    assert bull.has_triangle()


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


def test_relabel_moves_edges(p4):
    moved = relabel(p4, [2, 0, 3, 1])
    assert set(moved.edges()) == {(0, 2), (0, 3), (1, 3)}


def test_induced_subgraph_mapping(bull):
    sub, mapping = induced_subgraph(bull, [4, 1, 3])
    assert mapping == (1, 3, 4)
    assert set(sub.edges()) == {(0, 1), (1, 2)}


def test_check_vertices():
    g = Graph.empty(3)
    assert check_vertices(g, [2, 0]) == [2, 0]
    with pytest.raises(VertexError):
        check_vertices(g, [0, 3])
    with pytest.raises(VertexError):
        check_vertices(g, [1, 1])


def test_induced_p4(p4, k4):
    assert is_induced_p4(p4, (0, 1, 2, 3))
    assert is_induced_p4(p4, (3, 2, 1, 0))
    assert not is_induced_p4(p4, (1, 0, 2, 3))
    assert not is_induced_p4(k4, (0, 1, 2, 3))


def test_p4_path_order(p4, c5, k4):
    assert p4_path_order(p4, {2, 0, 3, 1}) == (0, 1, 2, 3)
    assert p4_path_order(c5, (3, 1, 0, 2)) == (0, 1, 2, 3)
    assert p4_path_order(c5, (4, 0, 1, 2)) == (2, 1, 0, 4)
    assert p4_path_order(k4, (0, 1, 2, 3)) is None
    with pytest.raises(VertexError):
        p4_path_order(p4, (0, 1, 2))


def test_induced_c5(c5, bull):
    assert is_induced_c5(c5, range(5))
    assert not is_induced_c5(bull, range(5))
    assert cycle_order(c5, [4, 2, 0, 3, 1]) == (0, 1, 2, 3, 4)


def test_components(bull):
    assert components(bull, mask_of([0, 2, 4])) == [0b00001, 0b00100, 0b10000]
    assert components(bull, mask_of(range(5))) == [0b11111]
    assert components(bull, 0) == []


def test_networkx_conversion(bull):
    h = to_networkx(bull)
    assert list(h.nodes) == [0, 1, 2, 3, 4]
    assert sorted(h.edges()) == list(bull.edges())
    assert from_networkx(h) == bull
    assert to_networkx(Graph.empty(3)).number_of_nodes() == 3


def test_from_networkx_needs_consecutive_nodes():
    with pytest.raises(VertexError):
        from_networkx(nx.Graph([(0, 5)]))


@given(graphs(max_n=12))
def test_networkx_round_trip(g):
    assert from_networkx(to_networkx(g)) == g
