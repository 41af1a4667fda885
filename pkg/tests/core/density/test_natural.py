from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.core.density import density_report, natural_density
from src.core.perset import bitset, parse_set
from src.core.perset.oracle import materialize
from tests.core.conftest import carrier
from tests.core.perset.strategies import natural_sets


@pytest.mark.parametrize(
    "literal, expected",
    [
        ("0+1N", Fraction(1)),
        ("0+2N", Fraction(1, 2)),
        ("{1}, 0+2N", Fraction(1, 2)),
        ("1+3N, 2+3N", Fraction(2, 3)),
        ("{0,1}", Fraction(0)),
        ("0-1N", Fraction(0)),
    ],
)
def test_densities_over_naturals(nat, literal, expected):
    assert natural_density(parse_set(literal), nat) == expected


def test_torsion_columns_share_the_mass(c2_nat):
    assert natural_density(parse_set("C=2; (0)0+1N"), c2_nat) == Fraction(1, 2)
    assert natural_density(c2_nat.carrier, c2_nat) == 1


def test_group_carrier_averages_both_sides(integers):
    assert natural_density(parse_set("0+1N"), integers) == Fraction(1, 2)
    assert natural_density(parse_set("0+2Z"), integers) == Fraction(1, 2)
    assert natural_density(parse_set("0+1Z"), integers) == 1


def test_negative_carrier(nonpositive):
    assert natural_density(parse_set("0-2N"), nonpositive) == Fraction(1, 2)
    assert natural_density(parse_set("0+1N"), nonpositive) == 0


def test_normalization(nat, numerical_3_5):
    assert natural_density(numerical_3_5.carrier, numerical_3_5) == 1
    assert natural_density(nat.carrier, nat) == 1


def test_report_serializes_fraction(nat):
    data = density_report(parse_set("1+3N, 2+3N"), nat).model_dump(mode="json")
    assert data["density"] == "2/3"


@hsettings(max_examples=40, deadline=None)
@given(natural_sets(), natural_sets(), st.integers(-20, 20))
def test_density_axioms(a, b, shift):
    t = carrier("0+1N")
    rest = b.difference(a)
    assert natural_density(a.union(rest), t) == natural_density(a, t) + natural_density(rest, t)
    assert natural_density(a.translate((shift,)), t) == natural_density(a, t)
    assert 0 <= natural_density(a, t) <= 1


@hsettings(max_examples=25, deadline=None)
@given(natural_sets(), st.integers(-20, 20))
def test_group_density_reflection(a, shift):
    z = carrier("0+1Z")
    line = a.union(a.negate().translate((shift,)))
    assert natural_density(line.negate(), z) == natural_density(line, z)


COUNT_LIMIT = 10**5


@hsettings(max_examples=20, deadline=None)
@given(natural_sets())
def test_density_matches_counting(a):
    counted = bitset.popcount(materialize(a, 0, COUNT_LIMIT)[0])
    slack = Fraction(2 * max(a.hi, 0) + a.period, COUNT_LIMIT)
    assert abs(Fraction(counted, COUNT_LIMIT) - natural_density(a, carrier("0+1N"))) <= slack
