"""
Word-parallel bitset kernels on Python integers.

Two encodings are used throughout the package:

* strips: bit ``i`` of an int stands for the integer ``start + i``;
* patterns: bit ``r`` of an int with ``period`` bits stands for the residue
  class ``r mod period``.
"""

from __future__ import annotations

from typing import Iterator


def mask(width: int) -> int:
    return (1 << width) - 1 if width > 0 else 0


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


def rotate(pattern: int, k: int, period: int) -> int:
    """Move residue ``r`` to ``r + k`` modulo ``period``."""
    k %= period
    if not k:
        return pattern
    return ((pattern << k) | (pattern >> (period - k))) & mask(period)


def reverse(bits: int, width: int) -> int:
    if width <= 0 or not bits:
        return 0
    return int(format(bits, f"0{width}b")[::-1], 2)


def negate_pattern(pattern: int, period: int) -> int:
    """Residue ``r`` to ``-r`` modulo ``period``."""
    return rotate(reverse(pattern, period), 1, period)


def tile(pattern: int, period: int, start: int, stop: int) -> int:
    """Strip over ``[start, stop)`` holding every ``n`` whose residue is in ``pattern``."""
    width = stop - start
    if width <= 0 or not pattern:
        return 0
    block = rotate(pattern, -start, period)
    acc, filled = block, period
    while filled < width:
        acc |= acc << filled
        filled *= 2
    return acc & mask(width)


def fold(bits: int, start: int, period: int) -> int:
    """Residue classes met by a strip."""
    out = 0
    while bits:
        chunk = bits & mask(period)
        if chunk:
            out |= rotate(chunk, start, period)
        bits >>= period
        start += period
    return out


def shift_into(bits: int, start: int, window_start: int, width: int) -> int:
    """Re-base a strip starting at ``start`` onto ``[window_start, window_start + width)``."""
    offset = start - window_start
    if offset >= 0:
        return (bits << offset) & mask(width)
    return (bits >> -offset) & mask(width)


def convolve(x: int, y: int) -> int:
    """Sumset of two strips (offsets add)."""
    if not x or not y:
        return 0
    if popcount(x) > popcount(y):
        x, y = y, x
    out = 0
    for i in iter_bits(x):
        out |= y << i
    return out


def cyclic_convolve(x: int, y: int, period: int) -> int:
    """Sumset of two residue patterns in ``ℤ/period``."""
    if not x or not y:
        return 0
    if popcount(x) > popcount(y):
        x, y = y, x
    out = 0
    full = mask(period)
    for r in iter_bits(x):
        out |= rotate(y, r, period)
        if out == full:
            break
    return out
