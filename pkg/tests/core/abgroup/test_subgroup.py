import math

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.core.abgroup import (
    Subgroup,
    difference_subgroup,
    subgroup_from_periodic,
    subgroup_model,
)
from src.core.errors import AmbientMismatchError, PreconditionError
from src.core.perset import AmbientGroup, PeriodicSet, difference_set, parse_set

Z = AmbientGroup()
C2 = AmbientGroup((2,))


def _cyclic(m):
    return Subgroup.generated_by(Z, [(m,)])


def test_subgroup_of_progression_line():
    h = subgroup_from_periodic(parse_set("0+2Z"))
    assert h == _cyclic(2)
    assert h.index() == 2


def test_subgroup_of_full_difference_set():
    d = difference_set(parse_set("{1}, 0+2N"))
    assert subgroup_from_periodic(d).is_full()


def test_parity_subgroup_of_c2():
    d = parse_set("C=2; (0)2+2N, (0)-2-2N, (1)1+2N, (1)-1-2N")
    h = subgroup_from_periodic(d)
    assert h.index() == 2
    assert h.member((1, 3))
    assert not h.member((0, 1))
    assert h.basis == ((1, 1), (0, 2))


def test_quotient_of_even_integers():
    info = _cyclic(2).quotient()
    assert info.invariant_factors == (2,)
    assert info.is_finite and info.is_cyclic
    assert info.coset_reps == ((0,), (1,))


def test_sum_and_intersection():
    assert _cyclic(2).sum(_cyclic(3)).is_full()
    assert _cyclic(2).intersect(_cyclic(3)) == _cyclic(6)
    assert (_cyclic(4) & _cyclic(6)) == _cyclic(12)
    assert (_cyclic(4) + _cyclic(6)) == _cyclic(2)


def test_infinite_index():
    h = Subgroup.generated_by(C2, [(1, 0)])
    assert h.index() == math.inf
    assert h.quotient().free_rank == 1
    assert h.to_periodic() == parse_set("C=2; (0){0}, (1){0}")
    with pytest.raises(PreconditionError):
        list(h.coset_representatives())


def test_reduce_gives_least_nonnegative_rep():
    h = Subgroup.generated_by(AmbientGroup((4,)), [(2, 3)])
    assert h.index() == 12
    for g in [(1, 7), (3, -5), (0, 11)]:
        rep = h.reduce(g)
        assert h.member(tuple(a - b for a, b in zip(g, rep)))
        assert all(x >= 0 for x in rep)
    assert h.reduce((2, 3)) == (0, 0)


def test_full_and_cyclic_quotient():
    assert Subgroup.full(C2).is_full()
    assert Subgroup.full(C2).describe() == "G"
    assert Subgroup.generated_by(C2, [(0, 1)]).is_cyclic_quotient()
    klein = Subgroup.generated_by(AmbientGroup((2,)), [(0, 2)])
    assert not klein.is_cyclic_quotient()
    assert klein.quotient().invariant_factors == (2, 2)


def test_difference_subgroup_agrees_with_difference_set():
    for literal in ["{0,1}, 0+4N, 2+4N", "{1}, 0+2N", "0+3N, 1+3N", "C=2; (1){0}, (0)0+2N"]:
        d = parse_set(literal)
        assert difference_subgroup(d) == subgroup_from_periodic(difference_set(d))


def test_to_periodic_roundtrip():
    h = subgroup_from_periodic(parse_set("C=2; (1)1+2Z"))
    assert subgroup_from_periodic(h.to_periodic()) == h


def test_errors():
    with pytest.raises(PreconditionError):
        subgroup_from_periodic(PeriodicSet.empty(Z))
    with pytest.raises(AmbientMismatchError):
        _cyclic(2).sum(Subgroup.full(C2))


def test_model():
    model = subgroup_model(_cyclic(6))
    assert model.basis == [["6"]]
    assert model.index == "6"


def _brute_index(d, gens, lift):
    """Coset count of ⟨gens⟩ in ℤ/d ⊕ ℤ computed by closure in ℤ/d ⊕ ℤ/lift."""
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        c, n = frontier.pop()
        for gc, gn in gens + [(d, 0), (0, lift)]:
            nxt = ((c + gc) % d, (n + gn) % lift)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return d * lift // len(seen)


@hsettings(max_examples=60, deadline=None)
@given(
    st.integers(2, 12),
    st.lists(st.tuples(st.integers(0, 11), st.integers(-6, 6)), min_size=1, max_size=3),
)
def test_index_matches_coset_count(d, gens):
    g = 0
    for _, n in gens:
        g = math.gcd(g, n)
    if g == 0:
        return
    h = Subgroup.generated_by(AmbientGroup((d,)), gens)
    assert h.index() == _brute_index(d, gens, d * g)
