import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.core.errors import PreconditionError
from src.core.perset import (
    AmbientGroup,
    PeriodicSet,
    ResidueProfile,
    difference_set,
    fold_sums,
    h_fold,
    minkowski_sum,
    parse_set,
)
from src.core.perset.periodic import expand_pattern

from src.core.perset.oracle import brute_sum, check_window, materialize

from .strategies import ambients, natural_sets, periodic_sets, set_pairs

Z = AmbientGroup()


def _brute_member(a, b, n):
    # both operands live in ℕ
    return any(a.member((x,)) and b.member((n - x,)) for x in range(0, n + 1))


def test_naturals_closed(naturals):
    assert minkowski_sum(naturals, naturals) == naturals


def test_h_fold_examples():
    a = parse_set("{1}, 0+2N")
    assert h_fold(a, 2) == parse_set("0+1N")
    b = parse_set("{0,1}, 0+4N")
    assert h_fold(b, 3) == parse_set("{3}, 0+4N, 1+4N, 2+4N")
    assert h_fold(b, 4) == parse_set("0+1N")


def test_sums_with_left_tails(naturals):
    assert difference_set(naturals) == PeriodicSet.full(Z)
    assert minkowski_sum(parse_set("{0,1}"), naturals.negate()) == parse_set("1-1N")
    assert minkowski_sum(parse_set("0+3N"), parse_set("1-3N")) == parse_set("1+3Z")


def test_sum_with_torsion():
    a = parse_set("C=2; (1){0}, (0)0+1N")
    assert minkowski_sum(a, a) == parse_set("C=2; (0)0+1N, (1)0+1N")


def test_empty_operand(naturals):
    assert minkowski_sum(naturals, PeriodicSet.empty(Z)).is_empty()


def test_h_fold_requires_positive_h(naturals):
    with pytest.raises(PreconditionError):
        h_fold(naturals, 0)


def test_fold_sums_matches_h_fold():
    a = parse_set("{0,1}, 0+5N")
    sums = fold_sums(a, 4)
    assert [h_fold(a, h) for h in range(1, 5)] == sums


@hsettings(max_examples=60, deadline=None)
@given(natural_sets(), natural_sets())
def test_sum_matches_brute_force(a, b):
    s = minkowski_sum(a, b)
    for n in range(0, 60):
        assert s.member((n,)) == _brute_member(a, b, n)
    assert not any(s.member((n,)) for n in range(-10, 0))


@hsettings(max_examples=40, deadline=None)
@given(natural_sets(), natural_sets(), natural_sets())
def test_sum_laws(a, b, c):
    assert minkowski_sum(a, b) == minkowski_sum(b, a)
    assert minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c))
    assert minkowski_sum(a.negate(), b.negate()) == minkowski_sum(a, b).negate()


@hsettings(max_examples=40, deadline=None)
@given(natural_sets(), st.integers(-7, 7))
def test_translation_commutes_with_sum(a, m):
    b = parse_set("{0,2}, 5+3N")
    assert minkowski_sum(a.translate((m,)), b) == minkowski_sum(a, b).translate((m,))


@hsettings(max_examples=40, deadline=None)
@given(natural_sets(), st.integers(1, 4))
def test_right_pattern_of_h_fold(a, h):
    if not a.has_right_tail():
        return
    profile = ResidueProfile.of(a, a.period)
    predicted = profile.fold_right(profile.multiples(h)[h - 1])
    ha = h_fold(a, h)
    actual = tuple(expand_pattern(m, ha.period, a.period) for m in ha.right)
    assert actual == predicted


@hsettings(max_examples=60, deadline=None)
@given(set_pairs())
def test_sum_matches_windowed_brute_force(pair):
    a, b = pair
    start, stop = check_window(max(a.period, b.period), 1)
    assert materialize(minkowski_sum(a, b), start, stop) == brute_sum(a, b, start, stop)


@hsettings(max_examples=25, deadline=None)
@given(st.data())
def test_h_fold_matches_windowed_brute_force(data):
    amb = data.draw(ambients())
    a = data.draw(periodic_sets(amb, max_period=4, max_window=6))
    h = data.draw(st.integers(2, 6))
    start, stop = check_window(a.period, h)
    previous = a
    for k in range(2, h + 1):
        current = h_fold(a, k)
        assert materialize(current, start, stop) == brute_sum(a, previous, start, stop)
        previous = current


@hsettings(max_examples=40, deadline=None)
@given(natural_sets(), natural_sets(), st.integers(1, 3))
def test_sums_are_monotone(a, b, h):
    union = a | b
    assert a.issubset(union)
    assert minkowski_sum(a, b).issubset(minkowski_sum(union, union))
    assert h_fold(a, h).issubset(h_fold(union, h))


@hsettings(max_examples=30, deadline=None)
@given(natural_sets(max_period=4, max_window=8), st.integers(1, 3), st.integers(1, 3))
def test_h_fold_is_additive(a, i, j):
    assert h_fold(a, i + j) == minkowski_sum(h_fold(a, i), h_fold(a, j))
