"""
Eventually periodic subsets of ``C ⊕ ℤ``.

A set is stored per torsion index ``c`` as

* a window strip over ``[lo, hi)``,
* a right pattern: for ``n >= hi``, ``(c, n)`` is a member iff ``n mod p`` is set,
* a left pattern: the same for ``n < lo``.

Every instance is canonical (minimal period, minimal window), so dataclass
equality is set equality.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import lcm
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from src.core.config import settings
from src.core.errors import CapacityError, PreconditionError
from src.core.perset import bitset
from src.core.perset.group import AmbientGroup, GroupElement, same_ambient

logger = logging.getLogger(__name__)

Columns = Tuple[int, ...]


def _divisors(n: int) -> List[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def check_period(period: int) -> int:
    if period > settings.ADDBASIS_MAX_PERIOD:
        raise CapacityError(
            f"period {period} exceeds ADDBASIS_MAX_PERIOD={settings.ADDBASIS_MAX_PERIOD}"
        )
    return period


def expand_pattern(pattern: int, period: int, new_period: int) -> int:
    if period == new_period:
        return pattern
    return bitset.tile(pattern, period, 0, new_period)


@dataclass(frozen=True)
class PeriodicSet:
    ambient: AmbientGroup
    period: int
    lo: int
    hi: int
    window: Columns
    right: Columns
    left: Columns

    # Construction

    @classmethod
    def build(
        cls,
        ambient: AmbientGroup,
        period: int,
        lo: int,
        hi: int,
        window: Sequence[int],
        right: Sequence[int],
        left: Sequence[int],
    ) -> "PeriodicSet":
        """Canonicalizing constructor; the raw fields may be any valid description."""
        return _canonicalize(
            ambient, period, lo, hi, list(window), list(right), list(left)
        )

    @classmethod
    def empty(cls, ambient: AmbientGroup) -> "PeriodicSet":
        zeros = (0,) * ambient.torsion_order
        return cls(ambient, 1, 0, 0, zeros, zeros, zeros)

    @classmethod
    def full(cls, ambient: AmbientGroup) -> "PeriodicSet":
        zeros = (0,) * ambient.torsion_order
        ones = (1,) * ambient.torsion_order
        return cls(ambient, 1, 0, 0, zeros, ones, ones)

    @classmethod
    def finite(
        cls, ambient: AmbientGroup, elements: Iterable[Sequence[int]]
    ) -> "PeriodicSet":
        points = [ambient.split(ambient.normalize(g)) for g in elements]
        if not points:
            return cls.empty(ambient)
        lo = min(n for _, n in points)
        hi = max(n for _, n in points) + 1
        window = [0] * ambient.torsion_order
        for c, n in points:
            window[c] |= 1 << (n - lo)
        zeros = [0] * ambient.torsion_order
        return cls.build(ambient, 1, lo, hi, window, zeros, zeros)

    @classmethod
    def progression(
        cls,
        ambient: AmbientGroup,
        start: Sequence[int],
        step: int,
        direction: str = "right",
    ) -> "PeriodicSet":
        """``start + step·ℕ`` (right), ``start - step·ℕ`` (left) or ``start + step·ℤ`` (line)."""
        if step < 1:
            raise PreconditionError("progression step must be positive")
        check_period(step)
        c, a = ambient.split(ambient.normalize(start))
        zeros = [0] * ambient.torsion_order
        right, left = list(zeros), list(zeros)
        residue = 1 << (a % step)
        if direction == "right":
            right[c] = residue
            lo = hi = a
        elif direction == "left":
            left[c] = residue
            lo = hi = a + 1
        elif direction == "line":
            right[c] = left[c] = residue
            lo = hi = 0
        else:
            raise PreconditionError(f"unknown progression direction {direction!r}")
        return cls.build(ambient, step, lo, hi, zeros, right, left)

    @classmethod
    def from_predicate(
        cls,
        ambient: AmbientGroup,
        period: int,
        lo: int,
        hi: int,
        member: Callable[[GroupElement], bool],
    ) -> "PeriodicSet":
        """
        Materialize a set known to follow period ``period`` outside ``[lo, hi)``.

        The predicate is sampled on the window and on one period of each tail.
        """
        check_period(period)
        cols = ambient.torsion_order
        window, right, left = [0] * cols, [0] * cols, [0] * cols
        for c in range(cols):
            for i, n in enumerate(range(lo, hi)):
                if member(ambient.join(c, n)):
                    window[c] |= 1 << i
            for n in range(hi, hi + period):
                if member(ambient.join(c, n)):
                    right[c] |= 1 << (n % period)
            for n in range(lo - period, lo):
                if member(ambient.join(c, n)):
                    left[c] |= 1 << (n % period)
        return cls.build(ambient, period, lo, hi, window, right, left)

    # Membership and inspection

    def __contains__(self, g: Sequence[int]) -> bool:
        return self.member(g)

    def member(self, g: Sequence[int]) -> bool:
        c, n = self.ambient.split(g)
        if self.lo <= n < self.hi:
            return bool(self.window[c] >> (n - self.lo) & 1)
        pattern = self.right[c] if n >= self.hi else self.left[c]
        return bool(pattern >> (n % self.period) & 1)

    def is_finite(self) -> bool:
        return not any(self.right) and not any(self.left)

    def is_empty(self) -> bool:
        return self.is_finite() and not any(self.window)

    def has_right_tail(self) -> bool:
        return any(self.right)

    def has_left_tail(self) -> bool:
        return any(self.left)

    def window_elements(self) -> List[GroupElement]:
        """Members inside ``[lo, hi)`` in lexicographic order."""
        out = []
        for c in range(self.ambient.torsion_order):
            for i in bitset.iter_bits(self.window[c]):
                out.append(self.ambient.join(c, self.lo + i))
        return sorted(out)

    def elements(self) -> List[GroupElement]:
        if not self.is_finite():
            raise PreconditionError("cannot list the elements of an infinite set")
        return self.window_elements()

    def tail_classes(self) -> List[Tuple[str, int, int]]:
        """Occupied tail classes as ``(side, torsion index, residue)``."""
        out = []
        for side, pattern in (("right", self.right), ("left", self.left)):
            for c in range(self.ambient.torsion_order):
                for r in bitset.iter_bits(pattern[c]):
                    out.append((side, c, r))
        return out

    def tail_representative(self, side: str, c: int, r: int) -> GroupElement:
        """First element of the class beyond the window on the given side."""
        p = self.period
        if side == "right":
            n = self.hi + (r - self.hi) % p
        else:
            n = self.lo - 1 - (self.lo - 1 - r) % p
        return self.ambient.join(c, n)

    def tail_elements(self, count: int) -> List[GroupElement]:
        """The ``count`` tail members closest to the window, nearest first."""
        if count <= 0 or self.is_finite():
            return []
        out: List[GroupElement] = []
        step = 0
        while len(out) < count:
            for c in range(self.ambient.torsion_order):
                n = self.hi + step
                if self.right[c] >> (n % self.period) & 1:
                    out.append(self.ambient.join(c, n))
                n = self.lo - 1 - step
                if self.left[c] >> (n % self.period) & 1:
                    out.append(self.ambient.join(c, n))
            step += 1
        return out[:count]

    def generators(self) -> List[GroupElement]:
        """Window elements plus one representative per occupied tail class."""
        gens = self.window_elements()
        gens.extend(self.tail_representative(*cls) for cls in self.tail_classes())
        return gens

    def some_element(self) -> GroupElement:
        gens = self.generators()
        if not gens:
            raise PreconditionError("the empty set has no elements")
        return min(gens, key=lambda g: (abs(g[-1]), g[-1] < 0, g))

    # Boolean algebra

    def union(self, other: "PeriodicSet") -> "PeriodicSet":
        return _combine(self, other, lambda x, y, m: x | y)

    def intersection(self, other: "PeriodicSet") -> "PeriodicSet":
        return _combine(self, other, lambda x, y, m: x & y)

    def difference(self, other: "PeriodicSet") -> "PeriodicSet":
        return _combine(self, other, lambda x, y, m: x & ~y & m)

    def sym_diff(self, other: "PeriodicSet") -> "PeriodicSet":
        return _combine(self, other, lambda x, y, m: x ^ y)

    def complement(self) -> "PeriodicSet":
        width = self.hi - self.lo
        full_w, full_p = bitset.mask(width), bitset.mask(self.period)
        return PeriodicSet.build(
            self.ambient,
            self.period,
            self.lo,
            self.hi,
            [w ^ full_w for w in self.window],
            [r ^ full_p for r in self.right],
            [l ^ full_p for l in self.left],
        )

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __xor__ = sym_diff

    def without(self, elements: Iterable[Sequence[int]]) -> "PeriodicSet":
        return self.difference(PeriodicSet.finite(self.ambient, elements))

    def subeq(self, other: "PeriodicSet") -> bool:
        """``self ∖ other`` is finite."""
        return self.difference(other).is_finite()

    def sim(self, other: "PeriodicSet") -> bool:
        return self.sym_diff(other).is_finite()

    def issubset(self, other: "PeriodicSet") -> bool:
        return self.difference(other).is_empty()

    # Group actions

    def translate(self, x: Sequence[int]) -> "PeriodicSet":
        amb = self.ambient
        cx, m = amb.split(x)
        cols = amb.torsion_order
        window, right, left = [0] * cols, [0] * cols, [0] * cols
        for c in range(cols):
            target = amb.add_index(c, cx)
            window[target] = self.window[c]
            right[target] = bitset.rotate(self.right[c], m, self.period)
            left[target] = bitset.rotate(self.left[c], m, self.period)
        return PeriodicSet.build(
            amb, self.period, self.lo + m, self.hi + m, window, right, left
        )

    def negate(self) -> "PeriodicSet":
        amb = self.ambient
        cols = amb.torsion_order
        width = self.hi - self.lo
        window, right, left = [0] * cols, [0] * cols, [0] * cols
        for c in range(cols):
            target = amb.neg_index(c)
            window[target] = bitset.reverse(self.window[c], width)
            right[target] = bitset.negate_pattern(self.left[c], self.period)
            left[target] = bitset.negate_pattern(self.right[c], self.period)
        return PeriodicSet.build(
            amb, self.period, 1 - self.hi, 1 - self.lo, window, right, left
        )

    __neg__ = negate

    # Helpers for kernels

    def extended(self, period: int, lo: int, hi: int) -> Tuple[List[int], List[int], List[int]]:
        """Raw columns describing the same set over a wider window and a multiple period."""
        if period % self.period or lo > self.lo or hi < self.hi:
            raise PreconditionError("extension must widen the window and refine the period")
        width = hi - lo
        window, right, left = [], [], []
        for c in range(self.ambient.torsion_order):
            r = expand_pattern(self.right[c], self.period, period)
            l = expand_pattern(self.left[c], self.period, period)
            bits = self.window[c] << (self.lo - lo)
            bits |= bitset.tile(l, period, lo, self.lo)
            bits |= bitset.tile(r, period, self.hi, hi) << (self.hi - lo)
            window.append(bits & bitset.mask(width))
            right.append(r)
            left.append(l)
        return window, right, left

    def __str__(self) -> str:
        from src.core.perset.literal import format_set

        return format_set(self)


def _combine(
    a: PeriodicSet, b: PeriodicSet, op: Callable[[int, int, int], int]
) -> PeriodicSet:
    amb = same_ambient(a.ambient, b.ambient)
    period = check_period(lcm(a.period, b.period))
    lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
    wa, ra, la = a.extended(period, lo, hi)
    wb, rb, lb = b.extended(period, lo, hi)
    mw, mp = bitset.mask(hi - lo), bitset.mask(period)
    return PeriodicSet.build(
        amb,
        period,
        lo,
        hi,
        [op(x, y, mw) & mw for x, y in zip(wa, wb)],
        [op(x, y, mp) & mp for x, y in zip(ra, rb)],
        [op(x, y, mp) & mp for x, y in zip(la, lb)],
    )


def _canonicalize(
    amb: AmbientGroup,
    period: int,
    lo: int,
    hi: int,
    window: List[int],
    right: List[int],
    left: List[int],
) -> PeriodicSet:
    cols = amb.torsion_order
    if not (len(window) == len(right) == len(left) == cols):
        raise PreconditionError("column count does not match the torsion order")
    if period < 1 or hi < lo:
        raise PreconditionError(f"invalid period {period} or window [{lo}, {hi})")

    # Minimal period: the periods of a cyclic pattern are the multiples of the least one.
    for d in _divisors(period)[:-1]:
        if all(bitset.rotate(m, d, period) == m for m in right + left):
            right = [m & bitset.mask(d) for m in right]
            left = [m & bitset.mask(d) for m in left]
            period = d
            break

    width = hi - lo
    mis_right = mis_left = 0
    for c in range(cols):
        mis_right |= window[c] ^ bitset.tile(right[c], period, lo, hi)
        mis_left |= window[c] ^ bitset.tile(left[c], period, lo, hi)

    if mis_right:
        t_right: Optional[int] = lo + mis_right.bit_length()
    elif right == left:
        t_right = None
    else:
        t_right = None
        for j in range(1, period + 1):
            n = lo - j
            r = n % period
            if any((right[c] ^ left[c]) >> r & 1 for c in range(cols)):
                t_right = n + 1
                break

    zeros = (0,) * cols
    if t_right is None:
        return PeriodicSet(amb, period, 0, 0, zeros, tuple(right), tuple(left))

    if mis_left:
        t_left = lo + (mis_left & -mis_left).bit_length() - 1
    else:
        t_left = hi
    new_lo, new_hi = min(t_left, t_right), t_right
    if new_lo >= new_hi:
        return PeriodicSet(amb, period, new_hi, new_hi, zeros, tuple(right), tuple(left))
    shift = new_lo - lo
    new_mask = bitset.mask(new_hi - new_lo)
    new_window = tuple((w >> shift) & new_mask for w in window)
    return PeriodicSet(amb, period, new_lo, new_hi, new_window, tuple(right), tuple(left))


def union_all(ambient: AmbientGroup, sets: Iterable[PeriodicSet]) -> PeriodicSet:
    out = PeriodicSet.empty(ambient)
    for s in sets:
        out = out.union(s)
    return out


def iter_window_points(s: PeriodicSet) -> Iterator[Tuple[int, int]]:
    """``(torsion index, n)`` for every window member."""
    for c in range(s.ambient.torsion_order):
        for i in bitset.iter_bits(s.window[c]):
            yield c, s.lo + i
