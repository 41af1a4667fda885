"""
``{2^k} ∪ {odd numbers}`` in ``(ℕ*, ×)``: a basis of order 2 in which every
prime is essential.
"""

import pytest
from sympy import primerange

from src.core.errors import PreconditionError
from src.core.structure import multiplicative_counterexample
from src.core.structure.multiplicative import (
    in_basis,
    product_order,
    reaches,
    valuation_sums,
    without,
)

SMALL = 3000


def _products(member, h, limit):
    base = [n for n in range(1, limit + 1) if member(n)]
    reached = {1}
    for _ in range(h):
        step = set()
        for s in reached:
            for a in base:
                if a * s > limit:
                    break
                step.add(a * s)
        reached = step
    return reached


def test_full_range_has_no_hits():
    report = multiplicative_counterexample(h_max=5, limit=10**6, prime_limit=30)
    assert report.ok
    assert report.order == 2
    assert [r.prime for r in report.removals] == list(primerange(2, 31))
    two = report.removals[0]
    assert two.targets == 250000
    assert two.hits == []
    assert all(r.targets >= 15 and not r.hits for r in report.removals[1:])


def test_membership():
    assert [n for n in range(1, 13) if in_basis(n)] == [1, 2, 3, 4, 5, 7, 8, 9, 11]
    assert not without(2)(2)
    assert without(3)(2)


def test_order_two():
    assert product_order(100) == 2
    assert not in_basis(6)


def test_valuation_sums_skip_one():
    assert 1 not in valuation_sums({0, 2, 3, 4}, 5, 20)
    assert valuation_sums({0, 1}, 3, 10) == {0, 1, 2, 3}


def test_divisor_products_match_brute_force():
    member = without(3)
    for h in (1, 2, 3):
        reached = _products(member, h, 200)
        for n in range(1, 201):
            assert reaches(n, h, member) == (n in reached)


@pytest.mark.parametrize("h", [2, 3, 4, 5])
def test_removing_two_by_brute_force(h):
    reached = _products(without(2), h, SMALL)
    assert not [n for n in reached if n % 4 == 2]
    assert 12 in reached


@pytest.mark.parametrize("p", list(primerange(3, 31)))
def test_removing_an_odd_prime_by_brute_force(p):
    reached = _products(without(p), 3, SMALL)
    assert not [p << k for k in range(SMALL.bit_length()) if (p << k) in reached]
    assert p * p in reached


def test_rejects_tiny_ranges():
    with pytest.raises(PreconditionError):
        multiplicative_counterexample(h_max=0)
