import pytest
from hypothesis import given
from hypothesis import strategies as st

from scgraph.errors import PermutationError
from scgraph.permutation import (CycleDecomposition, Permutation, check_sachs_ringel, cycle_decomposition,
                                 is_power_of_two)


def test_parse_and_format():
    t = Permutation.parse('(0 1 3 2)')
    assert t.images == (1, 3, 0, 2)
    assert t.format() == '(0 1 3 2)'
    assert str(Permutation.parse('(1 2 4 3)(0)')) == '(0)(1 2 4 3)'
    assert Permutation.parse('(3 0)(2)(1)').format() == '(0 3)(1)(2)'


@pytest.mark.parametrize('text', ['', '(0 0)', '(0 1', '()', '(a)', '(0 2)', '0 1', '(0)(0)'])
def test_parse_rejects_bad_notation(text):
    with pytest.raises(PermutationError):
        Permutation.parse(text)


def test_not_a_bijection():
    with pytest.raises(PermutationError):
        Permutation((0, 0))
    with pytest.raises(ValueError):
        Permutation((1, 2))


@given(st.integers(min_value=0, max_value=12).flatmap(lambda n: st.permutations(range(n))))
def test_group_laws(images):
    t = Permutation(tuple(images))
    identity = Permutation.identity(t.n)
    assert t.compose(t.inverse()) == identity
    assert t.inverse().compose(t) == identity
    assert t.power(0) == identity
    assert t.power(2) == t.compose(t)
    assert t.power(-1) == t.inverse()
    assert cycle_decomposition(t).to_permutation() == t
    assert sum(t.cycle_type()) == t.n
    if t.n:
        assert Permutation.parse(t.format()) == t


def test_compose_size_mismatch():
    with pytest.raises(PermutationError):
        Permutation.identity(2).compose(Permutation.identity(3))


def test_cycle_decomposition_order():
    t = Permutation.from_cycles(6, [(5, 3), (4, 1, 2)])
    assert cycle_decomposition(t).cycles == ((0,), (1, 2, 4), (3, 5))
    assert t.cycle_type() == [1, 2, 3]


def test_sachs_ringel_shape():
    assert check_sachs_ringel(CycleDecomposition(((0, 1, 2, 3), (4,))))
    assert check_sachs_ringel(CycleDecomposition((tuple(range(8)),)))
    assert not check_sachs_ringel(CycleDecomposition(((0,), (1,))))
    assert not check_sachs_ringel(CycleDecomposition(((0, 1), (2, 3))))


def test_is_power_of_two():
    assert [k for k in range(20) if is_power_of_two(k)] == [1, 2, 4, 8, 16]
