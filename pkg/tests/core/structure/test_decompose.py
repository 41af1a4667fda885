import pytest

from src.core.abgroup import Subgroup, subgroup_from_periodic
from src.core.errors import PreconditionError
from src.core.perset import AmbientGroup, minkowski_sum, parse_set
from src.core.structure import (
    grothendieck,
    half_space,
    multiples,
    structure_decompose,
    t_cap_H,
    validate_semigroup,
)

Z = AmbientGroup()
NUMERICAL_3_5 = "{0,3,5,6}, 8+1N"


def _carrier(literal):
    return validate_semigroup(parse_set(literal))


def test_numerical_semigroup():
    report = structure_decompose(_carrier(NUMERICAL_3_5))
    assert report.kind == "cofinite_to"
    assert report.x == (3,)
    assert report.remainders.elements() == [(0,), (5,), (10,)]
    assert report.sym_diff.elements() == [(1,), (2,), (4,), (7,)]
    assert report.unit == (1,)


def test_torsion_product():
    report = structure_decompose(_carrier("C=2; (0)0+1N, (1)0+1N"))
    assert report.x == (0, 1)
    assert report.remainders.elements() == [(0, 0), (1, 0)]
    assert report.sym_diff.is_empty()
    assert report.torsion == (2,)


def test_group_and_negative_carriers():
    assert structure_decompose(_carrier("0+1Z")).kind == "group"
    report = structure_decompose(_carrier("0-1N"))
    assert report.x == (-1,)
    assert report.unit == (-1,)
    assert report.remainders.elements() == [(0,)]


def test_rebuild_roundtrip():
    t = _carrier("C=2; (0){0}, (0)2+1N, (1)3+1N")
    report = structure_decompose(t)
    assert minkowski_sum(report.remainders, multiples(t.ambient, report.x)) == t.carrier


def test_multiples_with_torsion():
    amb = AmbientGroup((2,))
    assert multiples(amb, (1, 1)) == parse_set("C=2; (0)0+2N, (1)1+2N")
    assert half_space(amb, "right") == parse_set("C=2; (0)0+1N, (1)0+1N")


def test_multiples_of_torsion_element():
    with pytest.raises(PreconditionError):
        multiples(AmbientGroup((2,)), (1, 0))


def test_grothendieck():
    for literal in ["0+1N", NUMERICAL_3_5, "C=2; (0)0+1N, (1)0+1N"]:
        assert grothendieck(_carrier(literal)).is_full()


def test_t_cap_h_numerical():
    t = _carrier(NUMERICAL_3_5)
    sub, emb = t_cap_H(t, Subgroup.generated_by(Z, [(2,)]))
    assert sub.carrier == parse_set("{0}, 3+1N")
    assert emb.backward((3,)) == (6,)


def test_t_cap_h_naturals_and_parity():
    sub, _ = t_cap_H(_carrier("0+1N"), Subgroup.generated_by(Z, [(2,)]))
    assert sub.carrier == parse_set("0+1N")
    parity = subgroup_from_periodic(parse_set("C=2; (1)1+2Z"))
    sub, _ = t_cap_H(_carrier("C=2; (0)0+1N, (1)0+1N"), parity)
    assert sub.carrier == parse_set("0+1N")


def test_t_cap_h_needs_finite_index():
    with pytest.raises(PreconditionError):
        t_cap_H(_carrier("C=2; (0)0+1N, (1)0+1N"), Subgroup.generated_by(AmbientGroup((2,)), [(1, 0)]))
