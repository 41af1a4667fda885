"""
Windowed brute force for sums of eventually periodic sets.

Sets are laid out point by point as strips over a bounded range and summed
pair by pair, so the results are independent of the tail arithmetic in
``sumset``.

A witness ``x + y = n`` can be slid by ``P = lcm(periods)`` whenever both
``x`` and ``y`` stay inside the periodic part of their tails, so every
``n`` in ``[start, stop)`` that is a sum has a witness with
``x`` in ``[min(A.lo, start - B.hi) - P, max(A.hi, stop - 1 - B.lo) + P]``.
"""

from __future__ import annotations

import random
from math import lcm
from typing import List, Sequence, Tuple

from src.core.perset import bitset
from src.core.perset.group import AmbientGroup, same_ambient
from src.core.perset.periodic import PeriodicSet

# torsion parts with at most 8 elements
SMALL_AMBIENTS: Tuple[Tuple[int, ...], ...] = ((), (2,), (3,), (4,), (2, 2), (2, 4), (8,), (2, 2, 2))


def materialize(s: PeriodicSet, start: int, stop: int) -> List[int]:
    """Per torsion column, the strip of members over ``[start, stop)``."""
    strips = []
    for c in range(s.ambient.torsion_order):
        strip = 0
        lo, hi = start, min(stop, s.lo)
        if lo < hi:
            strip |= bitset.tile(s.left[c], s.period, lo, hi)
        lo, hi = max(start, s.lo), min(stop, s.hi)
        if lo < hi:
            part = (s.window[c] >> (lo - s.lo)) & bitset.mask(hi - lo)
            strip |= part << (lo - start)
        lo, hi = max(start, s.hi), stop
        if lo < hi:
            strip |= bitset.tile(s.right[c], s.period, lo, hi) << (lo - start)
        strips.append(strip)
    return strips


def witness_range(a: PeriodicSet, b: PeriodicSet, start: int, stop: int) -> Tuple[int, int]:
    period = lcm(a.period, b.period)
    x_lo = min(a.lo, start - b.hi) - period
    x_hi = max(a.hi, stop - 1 - b.lo) + period + 1
    return x_lo, x_hi


def _layout(a: PeriodicSet, b: PeriodicSet, start: int, stop: int):
    x_lo, x_hi = witness_range(a, b, start, stop)
    y_lo, y_hi = start - x_hi + 1, stop - x_lo
    return materialize(a, x_lo, x_hi), materialize(b, y_lo, y_hi), x_lo + y_lo - start


def brute_sum(a: PeriodicSet, b: PeriodicSet, start: int, stop: int) -> List[int]:
    """Strips of ``A + B`` over ``[start, stop)``."""
    amb = same_ambient(a.ambient, b.ambient)
    xs, ys, offset = _layout(a, b, start, stop)
    swapped = _layout(b, a, start, stop)
    # iterate over the sparser operand
    if sum(map(bitset.popcount, swapped[0])) < sum(map(bitset.popcount, xs)):
        xs, ys, offset = swapped

    out = [0] * amb.torsion_order
    for ca, column in enumerate(xs):
        for i in bitset.iter_bits(column):
            shift = i + offset
            for cb, strip in enumerate(ys):
                if strip:
                    out[amb.add_index(ca, cb)] |= strip << shift if shift >= 0 else strip >> -shift
    width = bitset.mask(stop - start)
    return [column & width for column in out]


def check_window(period: int, h: int) -> Tuple[int, int]:
    """``[-5ph - 50, 5ph + 50]`` as a half-open range."""
    m = 5 * period * h + 50
    return -m, m + 1


def sum_agrees(a: PeriodicSet, b: PeriodicSet, total: PeriodicSet, start: int, stop: int) -> bool:
    return materialize(total, start, stop) == brute_sum(a, b, start, stop)


def random_set(
    amb: AmbientGroup,
    rng: random.Random,
    max_period: int = 12,
    max_window: int = 24,
) -> PeriodicSet:
    """A random set with window width at most ``max_window`` and tails on either side."""
    cols = amb.torsion_order
    p = rng.randint(1, max_period)
    width = rng.randint(0, max_window)
    lo = rng.randint(-max_window, max_window)
    sides = rng.choice(("right", "left", "both", "none"))

    def pattern(side: str) -> int:
        if sides not in (side, "both") or rng.random() < 0.3:
            return 0
        return sum(1 << r for r in rng.sample(range(p), rng.randint(1, max(1, p // 3))))

    window = [rng.getrandbits(width) & rng.getrandbits(width) if width else 0 for _ in range(cols)]
    right = [pattern("right") for _ in range(cols)]
    left = [pattern("left") for _ in range(cols)]
    return PeriodicSet.build(amb, p, lo, lo + width, window, right, left)


def random_ambient(rng: random.Random, choices: Sequence[Tuple[int, ...]] = SMALL_AMBIENTS) -> AmbientGroup:
    return AmbientGroup(rng.choice(list(choices)))
