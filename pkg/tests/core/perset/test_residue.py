from src.core.perset import AmbientGroup, ResidueProfile, parse_set
from src.core.perset.residue import (
    class_count,
    class_covers,
    class_sum,
    class_zero,
)

Z = AmbientGroup()


def test_profile_of_numerical_semigroup():
    profile = ResidueProfile.of(parse_set("{1}, 0+4N"), 4)
    assert profile.image == (0b0011,)
    assert profile.right == (0b0001,)
    assert profile.left == (0,)
    assert profile.multiples(3) == [(0b0001,), (0b0011,), (0b0111,)]
    assert profile.fold_right((0b0111,)) == (0b0111,)


def test_class_helpers():
    c2 = AmbientGroup((2,))
    x = (0b01, 0b10)
    assert class_sum(c2, x, x, 2) == (0b01, 0b10)
    assert class_zero(c2) == (1, 0)
    assert class_covers((0b11, 0b10), x)
    assert not class_covers(x, (0b11, 0))
    assert class_count(x) == 2
