"""
Ambient groups ``G = C ⊕ ℤ`` with ``C = ℤ/d_1 ⊕ … ⊕ ℤ/d_r``.

Elements are plain tuples ``(c_1, …, c_r, n)``. Internally the torsion part
is flattened to an index in ``[0, |C|)`` (little-endian mixed radix) so that
periodic sets can keep one bitset column per torsion element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterator, List, Sequence, Tuple

from src.core.errors import AmbientMismatchError, ParseError

GroupElement = Tuple[int, ...]


@dataclass(frozen=True)
class AmbientGroup:
    factors: Tuple[int, ...] = ()

    def __post_init__(self):
        for i, d in enumerate(self.factors):
            if d < 2:
                raise ParseError(f"invariant factor {d} must be at least 2")
            if i and d % self.factors[i - 1]:
                raise ParseError(
                    f"invariant factors must form a divisibility chain, got {self.factors}"
                )

    @property
    def rank(self) -> int:
        return len(self.factors)

    @cached_property
    def torsion_order(self) -> int:
        return prod(self.factors)

    @cached_property
    def _strides(self) -> Tuple[int, ...]:
        strides, acc = [], 1
        for d in self.factors:
            strides.append(acc)
            acc *= d
        return tuple(strides)

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != self.rank:
            raise AmbientMismatchError(
                f"expected {self.rank} torsion coordinates, got {len(coords)}"
            )
        return sum((c % d) * s for c, d, s in zip(coords, self.factors, self._strides))

    def decode(self, index: int) -> Tuple[int, ...]:
        return tuple((index // s) % d for d, s in zip(self.factors, self._strides))

    @cached_property
    def _add_table(self) -> Tuple[Tuple[int, ...], ...]:
        decoded = [self.decode(i) for i in range(self.torsion_order)]
        return tuple(
            tuple(
                self.encode([x + y for x, y in zip(decoded[i], decoded[j])])
                for j in range(self.torsion_order)
            )
            for i in range(self.torsion_order)
        )

    @cached_property
    def _neg_table(self) -> Tuple[int, ...]:
        return tuple(
            self.encode([-x for x in self.decode(i)]) for i in range(self.torsion_order)
        )

    def add_index(self, i: int, j: int) -> int:
        return self._add_table[i][j]

    def neg_index(self, i: int) -> int:
        return self._neg_table[i]

    def torsion_indices(self) -> List[int]:
        """Torsion indices ordered lexicographically by their coordinates."""
        return sorted(range(self.torsion_order), key=self.decode)

    # Elements

    def element(self, *coords: int) -> GroupElement:
        if len(coords) != self.rank + 1:
            raise AmbientMismatchError(
                f"element of {self.describe()} needs {self.rank + 1} coordinates"
            )
        return self.normalize(coords)

    def normalize(self, coords: Sequence[int]) -> GroupElement:
        return tuple(c % d for c, d in zip(coords, self.factors)) + (int(coords[-1]),)

    def split(self, g: Sequence[int]) -> Tuple[int, int]:
        if len(g) != self.rank + 1:
            raise AmbientMismatchError(
                f"element {tuple(g)} does not live in {self.describe()}"
            )
        return self.encode(g[:-1]), int(g[-1])

    def join(self, index: int, n: int) -> GroupElement:
        return self.decode(index) + (n,)

    def zero(self) -> GroupElement:
        return (0,) * (self.rank + 1)

    def add(self, g: Sequence[int], h: Sequence[int]) -> GroupElement:
        return self.normalize([x + y for x, y in zip(g, h)])

    def sub(self, g: Sequence[int], h: Sequence[int]) -> GroupElement:
        return self.normalize([x - y for x, y in zip(g, h)])

    def neg(self, g: Sequence[int]) -> GroupElement:
        return self.normalize([-x for x in g])

    def scale(self, k: int, g: Sequence[int]) -> GroupElement:
        return self.normalize([k * x for x in g])

    def torsion_elements(self) -> Iterator[GroupElement]:
        for i in self.torsion_indices():
            yield self.join(i, 0)

    def describe(self) -> str:
        if not self.factors:
            return "Z"
        return " + ".join(f"Z/{d}" for d in self.factors) + " + Z"

    def header(self) -> str:
        return "C=" + "x".join(str(d) for d in self.factors) if self.factors else ""


def same_ambient(*ambients: AmbientGroup) -> AmbientGroup:
    first = ambients[0]
    for other in ambients[1:]:
        if other != first:
            raise AmbientMismatchError(
                f"operands live in {first.describe()} and {other.describe()}"
            )
    return first
