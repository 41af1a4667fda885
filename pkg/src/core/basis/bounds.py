"""
Explicit bounds used by the audits, and the handful of exactly known values.

Everything here is integer or ``Fraction`` arithmetic so that audit verdicts
stay exact.
"""

from fractions import Fraction
from math import comb
from typing import Dict

# Maximal removal orders over bases of ℕ of order h, known exactly for h <= 3.
KNOWN_X_NATURALS: Dict[int, int] = {1: 1, 2: 4, 3: 7}
KNOWN_S_NATURALS: Dict[int, int] = {2: 3}


def x1_cap(h: int) -> int:
    """Order of ``A ∖ {a}`` for regular ``a`` when ``A`` has order ``h``."""
    return (2 * h**3 + 8 * h**2 - 2 * h - 5) // 3


def x1_lower(h: int) -> int:
    return h * (h + 4) // 3


def x1_nathanson_upper(h: int) -> int:
    """Upper bound for removals from bases of ℕ."""
    return h * (h + 1) // 2 + -(-(h - 1) // 3)


def x2_cap(h: int, k: int) -> int:
    c = comb(h + k - 1, k)
    return (h + 1) * c * c - c + h


def s1_cap(h: int, group: bool) -> int:
    """Elements whose removal pushes the order above ``2h``."""
    return 2 * (h - 1) if group else h * (h - 1)


def s2_pair_cap(h: int, x: int) -> int:
    return 4 * h * (x - 1)


def index_cap(h: int, k: int) -> int:
    """``[G : ⟨A∖F − A∖F⟩]`` for ``|F| = k`` and ``A`` of order ``h``."""
    return comb(h + k - 1, h - 1)


def log_lower(k: int) -> Fraction:
    """Rational lower bound ``2(k-1)/(k+1) <= ln k``."""
    return Fraction(2 * (k - 1), k + 1)


def essential_count_cap(h: int, k: int) -> Fraction:
    """``(50 h log k)^k`` with ``log k`` replaced by a smaller rational."""
    return (50 * h * log_lower(k)) ** k


def exponent_cap(ell: int, h: int, k: int = 1) -> int:
    """Removal order cap in groups of exponent ``ell``."""
    return (h + 1) * ell ** (2 * k) - ell**k + h


def prime_power_exponent_cap(ell: int, h: int) -> int:
    return ell * h + ell**2 - ell


def nathnash_cap(h: int, m: int) -> int:
    """Order of ``B`` when ``m`` translates of ``B`` cover a basis of order ``h``."""
    return h + m * m * (h + 1) - m


def s_naturals_bracket(h: int) -> tuple:
    return h + 1, 2 * h


def grekos_cap(h: int) -> int:
    """Essential singletons of a basis of order ``h``."""
    return h - 1
