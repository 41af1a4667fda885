import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.core.errors import AmbientMismatchError, PreconditionError
from src.core.perset import AmbientGroup, PeriodicSet, parse_set

from .strategies import ambients, periodic_sets, set_pairs

Z = AmbientGroup()
C2 = AmbientGroup((2,))


def test_naturals_canonical_form(naturals):
    assert naturals.period == 1
    assert (naturals.lo, naturals.hi) == (0, 0)
    assert naturals.right == (1,)
    assert naturals.left == (0,)


def test_window_is_minimal():
    s = parse_set("{1}, 0+2N")
    assert s.period == 2
    assert (s.lo, s.hi) == (0, 2)
    assert s.window == (0b11,)
    assert s.right == (0b01,)


def test_equal_sets_have_equal_forms():
    assert parse_set("{0,1}, 2+1N") == parse_set("0+1N")
    assert parse_set("0+2N, 1+2N") == parse_set("0+1N")
    assert parse_set("0+4N, 2+4N, {1}") == parse_set("{1}, 0+2N")
    assert parse_set("0+1N, -1-1N") == PeriodicSet.full(Z)
    assert parse_set("3+1Z") == PeriodicSet.full(Z)


def test_empty_and_full():
    empty = PeriodicSet.empty(Z)
    assert parse_set("{}") == empty
    assert empty.is_empty()
    assert PeriodicSet.full(Z).complement() == empty


def test_membership():
    s = parse_set("{1}, 0+2N")
    assert s.member((1,))
    assert not s.member((3,))
    assert (4,) in s
    assert (-2,) not in s


def test_boolean_algebra(naturals, numerical_3_5):
    assert naturals.complement() == parse_set("-1-1N")
    assert naturals.union(naturals.negate()) == PeriodicSet.full(Z)
    assert naturals.intersection(naturals.negate()) == parse_set("{0}")
    diff = naturals.sym_diff(numerical_3_5)
    assert diff.elements() == [(1,), (2,), (4,), (7,)]
    assert naturals.difference(numerical_3_5) == diff


def test_translate_and_negate():
    assert parse_set("0+2N").translate((3,)) == parse_set("3+2N")
    assert parse_set("0+1N").negate() == parse_set("0-1N")
    s = parse_set("{-4, 7}, 10+3N, -9-2N")
    assert s.negate().negate() == s
    assert s.translate((5,)).translate((-5,)) == s


def test_predicates(naturals, numerical_3_5):
    assert naturals.subeq(parse_set("{5}, 3+1N"))
    assert not naturals.subeq(parse_set("0+2N"))
    assert naturals.sim(numerical_3_5)
    assert numerical_3_5.issubset(naturals)
    assert parse_set("{2, 9}").is_finite()
    assert not naturals.is_finite()


def test_elements_of_infinite_set(naturals):
    with pytest.raises(PreconditionError):
        naturals.elements()


def test_tail_helpers():
    s = parse_set("{1}, 0+2N, -3-3N")
    assert s.tail_elements(3) == [(2,), (0,), (4,)]
    assert (1,) in s.generators()
    assert s.some_element() == (0,)


def test_torsion_sets():
    s = parse_set("C=2; (0)0+1N, (1)0+1N")
    assert s.ambient == C2
    assert s.member((1, 5))
    assert not s.member((1, -1))
    assert s.negate().member((1, -5))
    assert s.translate((1, 2)).member((0, 2))
    assert not s.translate((1, 2)).member((0, 1))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        parse_set("0+1N").union(parse_set("C=2; (0)0+1N"))


def test_from_predicate():
    evens = PeriodicSet.from_predicate(Z, 2, 0, 0, lambda g: g[-1] % 2 == 0)
    assert evens == parse_set("0+2Z")
    shifted = PeriodicSet.from_predicate(Z, 3, -2, 4, lambda g: g[-1] >= 1 and g[-1] % 3 != 2)
    assert shifted == parse_set("1+3N, 3+3N")


def _points(amb, start=-40, stop=40):
    return [amb.join(c, n) for c in range(amb.torsion_order) for n in range(start, stop)]


@hsettings(max_examples=60, deadline=None)
@given(set_pairs())
def test_boolean_operations_pointwise(pair):
    a, b = pair
    union, meet, minus, sym = a | b, a & b, a - b, a ^ b
    complement = a.complement()
    for g in _points(a.ambient):
        x, y = a.member(g), b.member(g)
        assert union.member(g) == (x or y)
        assert meet.member(g) == (x and y)
        assert minus.member(g) == (x and not y)
        assert sym.member(g) == (x != y)
        assert complement.member(g) == (not x)


@hsettings(max_examples=60, deadline=None)
@given(st.data())
def test_translate_and_negate_pointwise(data):
    amb = data.draw(ambients())
    s = data.draw(periodic_sets(amb))
    c = data.draw(st.integers(0, amb.torsion_order - 1))
    shift = amb.join(c, data.draw(st.integers(-15, 15)))
    moved, flipped = s.translate(shift), s.negate()
    for g in _points(amb):
        assert moved.member(amb.add(g, shift)) == s.member(g)
        assert flipped.member(amb.neg(g)) == s.member(g)
