import pytest

from scgraph.graph import Graph
from strategies import sc_graphs


@pytest.fixture
def p4():
    return Graph.path(4)


@pytest.fixture
def c5():
    return Graph.cycle(5)


@pytest.fixture
def bull():
    """Triangle 1-2-3 with horns 0 (on 1) and 4 (on 3)."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])


@pytest.fixture
def paw():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])


@pytest.fixture
def k4():
    return Graph.complete(4)


@pytest.fixture
def claw():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture(scope='session')
def sc8():
    return sc_graphs(8)


@pytest.fixture(scope='session')
def sc9():
    return sc_graphs(9)
