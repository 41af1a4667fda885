"""
Subgroups of ``G = C ⊕ ℤ``.

A subgroup ``H`` is the image of a lattice ``M`` with
``L0 = d_1ℤ × … × d_rℤ × 0 ⊆ M ⊆ ℤ^{r+1}``; ``H`` is stored as the row
Hermite form of ``M`` (columns ``c_1, …, c_r, n``), so equal subgroups have
equal bases and ``[G : H] = [ℤ^{r+1} : M]`` is the product of the pivots.

Generators of ``⟨D⟩`` for an eventually periodic ``D``: every member of ``D``
is a window element or lies in an occupied tail class, where it differs from
that class's representative by a multiple of ``(0, …, 0, p)``. That vector is
itself the difference of two consecutive tail members, so window elements,
one representative per occupied tail class and ``(0, …, 0, p)`` generate
``⟨D⟩``, and each of them lies in ``⟨D⟩``.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Annotated, Iterable, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, PlainSerializer

from src.core.abgroup.lattice import (
    hermite_rows,
    invariant_factors,
    pivot_columns,
)
from src.core.errors import PreconditionError
from src.core.perset import AmbientGroup, GroupElement, PeriodicSet, same_ambient

logger = logging.getLogger(__name__)


def relation_rows(amb: AmbientGroup) -> List[List[int]]:
    size = amb.rank + 1
    return [[d if j == i else 0 for j in range(size)] for i, d in enumerate(amb.factors)]


@dataclass(frozen=True)
class QuotientInfo:
    free_rank: int
    invariant_factors: Tuple[int, ...]
    coset_reps: Optional[Tuple[GroupElement, ...]]

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.invariant_factors) <= 1

    @property
    def order(self) -> float:
        return math.prod(self.invariant_factors) if self.is_finite else math.inf


@dataclass(frozen=True)
class Subgroup:
    ambient: AmbientGroup
    basis: Tuple[Tuple[int, ...], ...]

    @classmethod
    def generated_by(cls, ambient: AmbientGroup, gens: Iterable[Sequence[int]]) -> "Subgroup":
        rows = [list(ambient.normalize(g)) for g in gens]
        for g in rows:
            if len(g) != ambient.rank + 1:
                raise PreconditionError(f"generator {g} does not live in {ambient.describe()}")
        hnf = hermite_rows(rows + relation_rows(ambient), ambient.rank + 1)
        return cls(ambient, tuple(tuple(r) for r in hnf))

    @classmethod
    def full(cls, ambient: AmbientGroup) -> "Subgroup":
        size = ambient.rank + 1
        return cls.generated_by(
            ambient, [[int(i == j) for j in range(size)] for i in range(size)]
        )

    @classmethod
    def trivial(cls, ambient: AmbientGroup) -> "Subgroup":
        return cls.generated_by(ambient, [])

    # Invariants

    @cached_property
    def _pivots(self) -> List[int]:
        return pivot_columns(self.basis)

    @property
    def n_generator(self) -> Optional[int]:
        """Least ``m > 0`` with ``(0, …, 0, m) ∈ H``; ``None`` if ``H`` is finite."""
        if self._pivots and self._pivots[-1] == self.ambient.rank:
            return self.basis[-1][-1]
        return None

    def index(self) -> float:
        if len(self.basis) < self.ambient.rank + 1:
            return math.inf
        return math.prod(row[col] for row, col in zip(self.basis, self._pivots))

    def has_finite_index(self) -> bool:
        return self.index() != math.inf

    def is_full(self) -> bool:
        return self.index() == 1

    def quotient(self) -> QuotientInfo:
        free, factors = invariant_factors(self.basis, self.ambient.rank + 1)
        reps = tuple(self.coset_representatives()) if free == 0 else None
        return QuotientInfo(free, tuple(factors), reps)

    def is_cyclic_quotient(self) -> bool:
        """``G/H`` finite and cyclic."""
        info = self.quotient()
        return info.is_finite and info.is_cyclic

    # Elements

    def reduce(self, g: Sequence[int]) -> GroupElement:
        """Canonical representative of ``g + H``: the lexicographically least nonnegative one."""
        v = list(self.ambient.normalize(g))
        for row, col in zip(self.basis, self._pivots):
            q = v[col] // row[col]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return self.ambient.normalize(v)

    def member(self, g: Sequence[int]) -> bool:
        v = list(self.ambient.normalize(g))
        for row, col in zip(self.basis, self._pivots):
            q, r = divmod(v[col], row[col])
            if r:
                return False
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    __contains__ = member

    def coset_representatives(self) -> Iterator[GroupElement]:
        if not self.has_finite_index():
            raise PreconditionError("an infinite-index subgroup has infinitely many cosets")
        ranges = [range(row[col]) for row, col in zip(self.basis, self._pivots)]
        for combo in itertools.product(*ranges):
            yield tuple(combo)

    def generators(self) -> List[GroupElement]:
        return [self.ambient.normalize(row) for row in self.basis if any(self.ambient.normalize(row))]

    # Lattice operations

    def sum(self, other: "Subgroup") -> "Subgroup":
        amb = same_ambient(self.ambient, other.ambient)
        return Subgroup.generated_by(amb, list(self.basis) + list(other.basis))

    __add__ = sum

    def intersect(self, other: "Subgroup") -> "Subgroup":
        amb = same_ambient(self.ambient, other.ambient)
        size = amb.rank + 1
        stacked = [list(r) + list(r) for r in self.basis]
        stacked += [list(r) + [0] * size for r in other.basis]
        hnf = hermite_rows(stacked, 2 * size)
        tail = [row[size:] for row in hnf if not any(row[:size])]
        return Subgroup.generated_by(amb, tail)

    __and__ = intersect

    def equals(self, other: "Subgroup") -> bool:
        same_ambient(self.ambient, other.ambient)
        return self.basis == other.basis

    def contains(self, other: "Subgroup") -> bool:
        return all(self.member(row) for row in other.basis)

    def is_proper_subgroup_of(self, other: "Subgroup") -> bool:
        return other.contains(self) and not self.contains(other)

    def to_periodic(self) -> PeriodicSet:
        amb = self.ambient
        step = self.n_generator
        if step is None:
            return PeriodicSet.finite(
                amb, [t for t in amb.torsion_elements() if self.member(t)]
            )
        return PeriodicSet.from_predicate(amb, step, 0, 0, self.member)

    def describe(self) -> str:
        if self.is_full():
            return "G"
        gens = ", ".join(
            "(" + ",".join(str(x) for x in g) + ")" if len(g) > 1 else str(g[0])
            for g in self.generators()
        )
        return f"<{gens}>" if gens else "0"


def subgroup_from_periodic(d: PeriodicSet) -> Subgroup:
    if d.is_empty():
        raise PreconditionError("cannot take the subgroup generated by the empty set")
    gens = d.generators()
    if not d.is_finite():
        gens.append(d.ambient.join(0, d.period))
    return Subgroup.generated_by(d.ambient, gens)


def difference_subgroup(d: PeriodicSet) -> Subgroup:
    """``⟨D - D⟩`` as ``⟨D - d0⟩`` for a fixed member ``d0``."""
    if d.is_empty():
        raise PreconditionError("the difference set of the empty set is empty")
    amb = d.ambient
    base = d.some_element()
    gens = [amb.sub(g, base) for g in d.generators()]
    if not d.is_finite():
        gens.append(amb.join(0, d.period))
    return Subgroup.generated_by(amb, gens)


class SubgroupModel(BaseModel):
    ambient: List[str] = Field(default_factory=list)
    basis: List[List[str]] = Field(default_factory=list)
    index: str
    description: str = ""


def subgroup_model(h: Subgroup) -> SubgroupModel:
    idx = h.index()
    return SubgroupModel(
        ambient=[str(d) for d in h.ambient.factors],
        basis=[[str(x) for x in row] for row in h.basis],
        index="inf" if idx == math.inf else str(idx),
        description=h.describe(),
    )


SubgroupField = Annotated[
    Subgroup, PlainSerializer(lambda h: subgroup_model(h).model_dump(), return_type=dict)
]
