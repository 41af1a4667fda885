"""
Exact Minkowski sums of eventually periodic sets.

With ``P = lcm(p_A, p_B)`` each operand splits into a finite window part
``F``, a right tail ``R`` and a left tail ``L``. Tail-with-tail sums are
arithmetic progressions: ``R + R`` is a right progression per class pair,
``L + L`` a left one and ``R + L`` a whole residue line. Outside
``[lo_A + lo_B - 2P, hi_A + hi_B + 2P)`` the sum therefore follows its
patterns, and inside that window it is computed by strip convolution with
the tails materialized only as far as they can reach.
"""

from __future__ import annotations

import logging
from math import lcm
from typing import List, Sequence, Tuple

from src.core.errors import PreconditionError
from src.core.perset import bitset
from src.core.perset.group import same_ambient
from src.core.perset.periodic import PeriodicSet, check_period, expand_pattern
from src.core.perset.residue import class_sum
from src.core.telemetry.metrics import MetricsCollector

logger = logging.getLogger(__name__)

# (torsion index, start, bits)
Strip = Tuple[int, int, int]


def _fold_window(s: PeriodicSet, period: int) -> List[int]:
    return [bitset.fold(w, s.lo, period) for w in s.window]


def _window_strips(s: PeriodicSet) -> List[Strip]:
    return [(c, s.lo, w) for c, w in enumerate(s.window) if w]


def _tail_strips(pattern: Sequence[int], period: int, start: int, stop: int) -> List[Strip]:
    if stop <= start:
        return []
    out = []
    for c, m in enumerate(pattern):
        bits = bitset.tile(m, period, start, stop)
        if bits:
            out.append((c, start, bits))
    return out


def minkowski_sum(a: PeriodicSet, b: PeriodicSet) -> PeriodicSet:
    amb = same_ambient(a.ambient, b.ambient)
    MetricsCollector().track_kernel("minkowski_sum")
    if a.is_empty() or b.is_empty():
        return PeriodicSet.empty(amb)

    period = check_period(lcm(a.period, b.period))
    ra = [expand_pattern(m, a.period, period) for m in a.right]
    la = [expand_pattern(m, a.period, period) for m in a.left]
    rb = [expand_pattern(m, b.period, period) for m in b.right]
    lb = [expand_pattern(m, b.period, period) for m in b.left]

    lo = a.lo + b.lo - 2 * period
    hi = a.hi + b.hi + 2 * period
    width = hi - lo
    acc = [0] * amb.torsion_order

    def add(xs: List[Strip], ys: List[Strip]) -> None:
        for c1, s1, x in xs:
            for c2, s2, y in ys:
                bits = bitset.convolve(x, y)
                if bits:
                    c = amb.add_index(c1, c2)
                    acc[c] |= bitset.shift_into(bits, s1 + s2, lo, width)

    fa, fb = _window_strips(a), _window_strips(b)
    add(fa, fb)
    # finite + right tail: b < hi - lo_A is all that can land in the window
    add(fa, _tail_strips(rb, period, b.hi, hi - a.lo))
    add(fb, _tail_strips(ra, period, a.hi, hi - b.lo))
    add(
        _tail_strips(ra, period, a.hi, hi - b.hi),
        _tail_strips(rb, period, b.hi, hi - a.hi),
    )
    add(fa, _tail_strips(lb, period, lo - a.hi + 1, b.lo))
    add(fb, _tail_strips(la, period, lo - b.hi + 1, a.lo))
    add(
        _tail_strips(la, period, lo - b.lo + 1, a.lo),
        _tail_strips(lb, period, lo - a.lo + 1, b.lo),
    )

    lines = [x | y for x, y in zip(class_sum(amb, ra, lb, period), class_sum(amb, la, rb, period))]
    fa_cls, fb_cls = _fold_window(a, period), _fold_window(b, period)
    right = [
        x | y | z | w
        for x, y, z, w in zip(
            class_sum(amb, fa_cls, rb, period),
            class_sum(amb, fb_cls, ra, period),
            class_sum(amb, ra, rb, period),
            lines,
        )
    ]
    left = [
        x | y | z | w
        for x, y, z, w in zip(
            class_sum(amb, fa_cls, lb, period),
            class_sum(amb, fb_cls, la, period),
            class_sum(amb, la, lb, period),
            lines,
        )
    ]
    for c, m in enumerate(lines):
        if m:
            acc[c] |= bitset.tile(m, period, lo, hi)

    return PeriodicSet.build(amb, period, lo, hi, acc, right, left)


def h_fold(a: PeriodicSet, h: int) -> PeriodicSet:
    """``hA = A + … + A`` (``h`` summands) by repeated doubling."""
    if h < 1:
        raise PreconditionError(f"h-fold sum needs h >= 1, got {h}")
    MetricsCollector().track_kernel("h_fold")
    result = None
    base = a
    while h:
        if h & 1:
            result = base if result is None else minkowski_sum(result, base)
        h >>= 1
        if h:
            base = minkowski_sum(base, base)
    return result


def difference_set(a: PeriodicSet) -> PeriodicSet:
    return minkowski_sum(a, a.negate())


def fold_sums(a: PeriodicSet, h_max: int) -> List[PeriodicSet]:
    """``[A, 2A, …, h_max·A]`` built incrementally."""
    if h_max < 1:
        return []
    out = [a]
    while len(out) < h_max:
        out.append(minkowski_sum(out[-1], a))
    return out
