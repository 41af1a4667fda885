import math

import pytest

from src.core.basis import bounds


def test_removal_caps():
    assert bounds.x1_cap(1) == 1
    assert bounds.x1_cap(2) == 13
    assert bounds.x1_cap(3) == 38
    assert bounds.x2_cap(2, 1) == 12
    assert bounds.x2_cap(2, 2) == 26


@pytest.mark.parametrize("h", [1, 2, 3])
def test_known_values_sit_between_bounds(h):
    known = bounds.KNOWN_X_NATURALS[h]
    assert bounds.x1_lower(h) == known
    assert bounds.x1_nathanson_upper(h) == known
    assert known <= bounds.x1_cap(h)


def test_counting_caps():
    assert bounds.s1_cap(3, group=False) == 6
    assert bounds.s1_cap(3, group=True) == 4
    assert bounds.s2_pair_cap(2, 4) == 24
    assert bounds.index_cap(2, 1) == 2
    assert bounds.index_cap(3, 2) == 6
    assert bounds.grekos_cap(1) == 0
    assert bounds.s_naturals_bracket(2) == (3, 4)
    assert bounds.KNOWN_S_NATURALS[2] in range(3, 5)


def test_exponent_caps():
    assert bounds.exponent_cap(2, 2) == 12
    assert bounds.exponent_cap(2, 2, k=2) == 3 * 16 - 4 + 2
    assert bounds.prime_power_exponent_cap(2, 2) == 6
    assert bounds.nathnash_cap(2, 1) == 4


def test_log_lower_bound():
    for k in range(1, 60):
        assert float(bounds.log_lower(k)) <= math.log(k) + 1e-12
    assert bounds.essential_count_cap(2, 2) == (100 * bounds.log_lower(2)) ** 2
