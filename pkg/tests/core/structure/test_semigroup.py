import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.core.errors import SemigroupError
from src.core.perset import PeriodicSet, minkowski_sum, parse_set
from src.core.structure import CarrierKind, validate_semigroup


@pytest.mark.parametrize(
    "literal, kind",
    [
        ("0+1N", CarrierKind.POSITIVE),
        ("{0,3,5,6}, 8+1N", CarrierKind.POSITIVE),
        ("{0}, 2+1N", CarrierKind.POSITIVE),
        ("0-1N", CarrierKind.NEGATIVE),
        ("0+1Z", CarrierKind.GROUP),
        ("C=2; (0)0+1N, (1)0+1N", CarrierKind.POSITIVE),
        ("C=2; (0)0+1Z, (1)0+1Z", CarrierKind.GROUP),
    ],
)
def test_valid_carriers(literal, kind):
    t = validate_semigroup(parse_set(literal))
    assert t.kind == kind
    assert t.translation_checks


@pytest.mark.parametrize(
    "literal, clause",
    [
        ("0+2N, {3}", "closed"),
        ("0+1N, {-1}", "closed"),
        ("0+2N", "generate"),
        ("{0}", "finite"),
        ("{}", "empty"),
        ("C=2; (0)0+1N", "generate"),
    ],
)
def test_rejected_carriers(literal, clause):
    with pytest.raises(SemigroupError) as info:
        validate_semigroup(parse_set(literal))
    assert clause in str(info.value)


def test_oriented_reflects_negative_carriers():
    t = validate_semigroup(parse_set("{0}, -2-1N"))
    flipped = t.oriented()
    assert flipped.kind == CarrierKind.POSITIVE
    assert flipped.carrier == parse_set("{0}, 2+1N")


def test_translates_are_similar():
    t = validate_semigroup(parse_set("{0,3,5,6}, 8+1N")).carrier
    for x in range(-6, 7):
        assert t.sim(t.translate((x,)))


def test_cosets_meet_the_carrier_infinitely():
    t = validate_semigroup(parse_set("C=2; (0)0+1N, (1)3+1N")).carrier
    coset = PeriodicSet.progression(t.ambient, (1, 1), 2, "line")
    assert not (coset & t).is_finite()


def test_serialization():
    data = validate_semigroup(parse_set("0+1N")).model_dump(mode="json")
    assert data["carrier"] == "0+1N"
    assert data["kind"] == "positive"
    assert data["translation_checks"] == ["0"]


CARRIERS = [
    "0+1N",
    "{0,3,5,6}, 8+1N",
    "{0}, -2-1N",
    "0+1Z",
    "C=2; (0)0+1N, (1)0+1N",
    "C=2; (0)0+1N, (1)3+1N",
]

points = st.lists(st.tuples(st.integers(0, 3), st.integers(-40, 40)), max_size=6)


@hsettings(max_examples=60, deadline=None)
@given(st.sampled_from(CARRIERS), points)
def test_absorbing_shift_swallows_finite_sets(literal, raw):
    t = validate_semigroup(parse_set(literal))
    amb = t.ambient
    f = [amb.join(c % amb.torsion_order, n) for c, n in raw]
    x = t.absorbing_shift(f)
    assert x in t.carrier
    assert all(amb.add(x, g) in t.carrier for g in f)


def test_absorbing_shift_on_groups_is_zero():
    t = validate_semigroup(parse_set("0+1Z"))
    assert t.absorbing_shift([(-50,), (50,)]) == (0,)


@hsettings(max_examples=40, deadline=None)
@given(
    st.sampled_from(CARRIERS),
    st.integers(1, 4),
    st.lists(st.integers(-3, 3), min_size=8, max_size=8),
    st.sets(st.integers(-6, 6), max_size=3),
    st.sets(st.integers(-6, 6), max_size=3),
)
def test_representatives_plus_subgroup_part_cover(literal, m, shifts, dropped, extra):
    t = validate_semigroup(parse_set(literal))
    amb = t.ambient
    h = PeriodicSet.progression(amb, amb.zero(), m, "line")
    r = PeriodicSet.finite(
        amb,
        [
            amb.join(c, j + m * shifts[(c * m + j) % len(shifts)])
            for c in range(amb.torsion_order)
            for j in range(m)
        ],
    )
    s = (t.carrier & h).without([amb.join(0, m * k) for k in dropped])
    s = s | PeriodicSet.finite(amb, [amb.join(0, m * k) for k in extra])
    assert t.carrier.subeq(minkowski_sum(r, s))
