"""
Residue-level view of periodic sets in ``Γ = C × ℤ/P``.

For a set ``A`` with right tail classes ``Q_R`` and image ``Ā`` (classes of all
its elements), the right pattern of ``hA`` is exactly ``(h-1)Ā + Q_R``: a
member far to the right needs at least one right-tail summand, and a tail
class contributes its whole progression. The same holds on the left. This
makes tail behaviour of all ``h``-fold sums computable in the finite group.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import List, Sequence, Tuple

from src.core.perset import bitset
from src.core.perset.group import AmbientGroup
from src.core.perset.periodic import PeriodicSet, check_period, expand_pattern

ClassSet = Tuple[int, ...]


def class_sum(amb: AmbientGroup, x: Sequence[int], y: Sequence[int], period: int) -> ClassSet:
    out = [0] * amb.torsion_order
    for c1, m1 in enumerate(x):
        if not m1:
            continue
        for c2, m2 in enumerate(y):
            if m2:
                out[amb.add_index(c1, c2)] |= bitset.cyclic_convolve(m1, m2, period)
    return tuple(out)


def class_union(x: Sequence[int], y: Sequence[int]) -> ClassSet:
    return tuple(a | b for a, b in zip(x, y))


def class_intersection(x: Sequence[int], y: Sequence[int]) -> ClassSet:
    return tuple(a & b for a, b in zip(x, y))


def class_covers(x: Sequence[int], y: Sequence[int]) -> bool:
    """Every class of ``y`` lies in ``x``."""
    return all(b & ~a == 0 for a, b in zip(x, y))


def class_zero(amb: AmbientGroup) -> ClassSet:
    out = [0] * amb.torsion_order
    out[0] = 1
    return tuple(out)


def class_count(x: Sequence[int]) -> int:
    return sum(bitset.popcount(m) for m in x)


@dataclass(frozen=True)
class ResidueProfile:
    ambient: AmbientGroup
    modulus: int
    image: ClassSet
    right: ClassSet
    left: ClassSet

    @classmethod
    def of(cls, s: PeriodicSet, modulus: int) -> "ResidueProfile":
        if modulus % s.period:
            raise ValueError(f"modulus {modulus} is not a multiple of period {s.period}")
        right = tuple(expand_pattern(m, s.period, modulus) for m in s.right)
        left = tuple(expand_pattern(m, s.period, modulus) for m in s.left)
        image = tuple(
            bitset.fold(w, s.lo, modulus) | r | l for w, r, l in zip(s.window, right, left)
        )
        return cls(s.ambient, modulus, image, right, left)

    def multiples(self, count: int) -> List[ClassSet]:
        """``[0·Ā, 1·Ā, …, (count-1)·Ā]``."""
        out = [class_zero(self.ambient)]
        while len(out) < count:
            out.append(self.fold_image(out[-1]))
        return out

    def fold_image(self, multiple: ClassSet) -> ClassSet:
        return class_sum(self.ambient, multiple, self.image, self.modulus)

    def fold_right(self, multiple: ClassSet) -> ClassSet:
        return class_sum(self.ambient, multiple, self.right, self.modulus)

    def fold_left(self, multiple: ClassSet) -> ClassSet:
        return class_sum(self.ambient, multiple, self.left, self.modulus)


def common_modulus(*sets: PeriodicSet) -> int:
    return check_period(lcm(*(s.period for s in sets)))


def carrier_patterns(t: PeriodicSet, modulus: int) -> Tuple[ClassSet, ClassSet]:
    return (
        tuple(expand_pattern(m, t.period, modulus) for m in t.right),
        tuple(expand_pattern(m, t.period, modulus) for m in t.left),
    )
