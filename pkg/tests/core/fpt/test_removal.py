import pytest

from src.core.errors import CapacityError
from src.core.fpt import remark_removal_orders


def test_smallest_case():
    report = remark_removal_orders(2, 2, 2, 8)
    assert sorted(e.element for e in report.entries) == [[0, 1], [1, 0], [1, 1]]
    assert all(e.regular and e.order == 3 for e in report.entries)
    assert report.max_order == 3
    assert report.caps == {"exponent": 12, "prime_power": 6}
    assert report.ok


def test_two_lower_blocks():
    report = remark_removal_orders(2, 2, 3, 10)
    assert len(report.entries) == 6
    assert {e.block for e in report.entries} == {0, 1}
    assert {e.order for e in report.entries} == {4}
    assert report.caps == {"exponent": 17, "prime_power": 8}


def test_odd_prime():
    report = remark_removal_orders(3, 1, 2, 6)
    assert [e.order for e in report.entries] == [3, 3]
    assert report.ok


def test_line_block_loses_its_only_direction():
    report = remark_removal_orders(2, 1, 2, 4)
    (entry,) = report.entries
    assert not entry.regular
    assert entry.order is None
    assert report.max_order is None


def test_cap_violation_flags_report(mocker):
    mocker.patch("src.core.fpt.removal.prime_power_exponent_cap", return_value=2)
    assert not remark_removal_orders(2, 2, 2, 8).ok


def test_capacity(mocker):
    mocker.patch("src.core.fpt.removal.MAX_EXHAUSTIVE", 8)
    with pytest.raises(CapacityError):
        remark_removal_orders(2, 2, 3, 10)
