import pytest

from src.core.basis import construct_exact_order_basis, ord_star, standard_carrier
from src.core.basis.construct import threshold
from src.core.errors import PreconditionError
from src.core.perset import parse_set


@pytest.mark.parametrize("name", ["N", "<3,5>", "C2+N"])
@pytest.mark.parametrize("h", range(2, 11))
def test_exact_order(name, h):
    t = standard_carrier(name)
    report = construct_exact_order_basis(t, h)
    assert report.order == h
    assert ord_star(report.candidate, t).order == h


def test_naturals_use_multiples(nat):
    report = construct_exact_order_basis(nat, 3)
    assert report.method == "remainders_plus_multiples"
    assert report.candidate == parse_set("{0,1}, 0+3N")
    assert report.attempts == ["remainders_plus_multiples: 3"]


def test_numerical_semigroup_falls_back(numerical_3_5):
    assert threshold(numerical_3_5) == 8
    report = construct_exact_order_basis(numerical_3_5, 2)
    assert len(report.attempts) >= 2
    assert report.order == 2


def test_torsion_product(c2_nat):
    report = construct_exact_order_basis(c2_nat, 2)
    assert report.method == "translated_product"
    assert report.candidate == parse_set("C=2; (0){1}, (0)0+2N, (1)0+2N")
    assert report.attempts[0] == "remainders_plus_multiples: 3"


def test_group_and_negative_carriers(integers, nonpositive):
    report = construct_exact_order_basis(integers, 3)
    assert report.method == "unit_plus_lines"
    assert report.candidate == parse_set("{1}, 0+3Z")
    negative = construct_exact_order_basis(nonpositive, 3)
    assert negative.candidate == parse_set("{-1}, 0-3N")


def test_order_one_is_rejected(nat):
    with pytest.raises(PreconditionError):
        construct_exact_order_basis(nat, 1)
