import pytest

from src.core.basis import erdos_graham, essential_subsets, random_corpus, reservoir
from src.core.errors import PreconditionError
from src.core.perset import parse_set


def test_reservoir_of_odd_unit(nat):
    report = reservoir(parse_set("{1}, 0+2N"), nat)
    assert report.subgroup.index() == 2
    assert report.reservoir == [(1,)]
    assert report.witnesses


@pytest.mark.parametrize("literal", ["0+1N", "{0}, 3+1N"])
def test_empty_reservoir(nat, literal):
    report = reservoir(parse_set(literal), nat)
    assert report.subgroup.is_full()
    assert report.reservoir == []


def test_single_essential_element(nat):
    family = essential_subsets(parse_set("{1}, 0+2N"), nat, 2)
    assert family.order == 2
    assert family.as_frozensets() == frozenset({frozenset({(1,)})})
    assert family.counts == {1: 1, 2: 0}
    assert family.essentials[0].index == 2


def test_two_essential_elements(nat):
    # removing 2 leaves 3ℤ, removing 3 leaves 2ℤ
    family = essential_subsets(parse_set("{2,3}, 0+6N"), nat, 2)
    assert family.order == 4
    assert family.counts == {1: 2, 2: 0}
    assert sorted(e.index for e in family.essentials) == [2, 3]


def test_essential_pair(nat):
    # neither 1 nor 3 alone matters, together they leave 4ℤ
    family = essential_subsets(parse_set("{1,3}, 0+4N"), nat, 2)
    assert family.order == 3
    assert family.counts == {1: 0, 2: 1}
    assert family.essentials[0].elements == [(1,), (3,)]
    assert family.essentials[0].index == 4


def test_order_one_has_no_essentials(nat):
    family = essential_subsets(parse_set("{0}, 3+1N"), nat, 3)
    assert family.counts == {1: 0, 2: 0, 3: 0}
    assert family.essentials == []


def test_group_essentials(integers):
    family = essential_subsets(parse_set("{1}, 0+2Z"), integers, 1)
    assert family.as_frozensets() == frozenset({frozenset({(1,)})})


def test_preconditions(nat):
    with pytest.raises(PreconditionError):
        essential_subsets(parse_set("{1}, 0+2N"), nat, 0)
    with pytest.raises(PreconditionError):
        essential_subsets(parse_set("0+2N"), nat, 1)


def test_essentials_are_minimal_exceptional_sets(nat):
    for a in random_corpus(nat, 25, seed=3):
        family = essential_subsets(a, nat, 2)
        for e in family.essentials:
            assert not erdos_graham(a, e.elements, nat)
            for x in e.elements:
                smaller = [y for y in e.elements if y != x]
                assert erdos_graham(a, smaller, nat)
