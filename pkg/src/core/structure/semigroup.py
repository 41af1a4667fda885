"""
Validation of translatable semigroups given as eventually periodic sets.

Translatability is checked on finitely many ``x`` only: window elements and
one representative per occupied tail class. Two members of the same tail class
differ by a multiple of ``(0, …, 0, p)`` and give the same ``T ∖ (x + T)`` up to
a finite set, since the set's description is ``p``-periodic outside the
window. For sums, ``T ∖ ((x+y) + T) ⊆ (T ∖ (x+T)) ∪ (x + (T ∖ (y+T)))``, so
finiteness on the checked elements extends to everything they generate, which
is all of ``T``.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from src.core.abgroup import difference_subgroup
from src.core.errors import SemigroupError, VerificationError
from src.core.perset import ElementField, GroupElement, PeriodicSet, SetField, minkowski_sum
from src.core.telemetry.metrics import MetricsCollector

logger = logging.getLogger(__name__)


class CarrierKind(str, Enum):
    GROUP = "group"
    POSITIVE = "positive"
    NEGATIVE = "negative"


class SemigroupT(BaseModel):
    """A carrier that passed closure, translatability and the Grothendieck check."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    carrier: SetField
    kind: CarrierKind
    translation_checks: Tuple[ElementField, ...] = ()

    @property
    def ambient(self):
        return self.carrier.ambient

    @property
    def is_group(self) -> bool:
        return self.kind == CarrierKind.GROUP

    def oriented(self) -> "SemigroupT":
        """The carrier reflected so that its tail points right."""
        if self.kind != CarrierKind.NEGATIVE:
            return self
        return SemigroupT(
            carrier=self.carrier.negate(),
            kind=CarrierKind.POSITIVE,
            translation_checks=tuple(
                self.ambient.neg(x) for x in self.translation_checks
            ),
        )

    def absorbing_shift(self, f: Iterable[Sequence[int]]) -> GroupElement:
        """Some ``x ∈ T`` with ``x + F ⊆ T`` for a finite ``F ⊆ G``."""
        amb = self.ambient
        points = [amb.normalize(g) for g in f]
        if self.is_group:
            return amb.zero()
        flip = self.kind == CarrierKind.NEGATIVE
        if flip:
            points = [amb.neg(g) for g in points]
        carrier = self.oriented().carrier
        start = carrier.hi - min([g[-1] for g in points] + [0])
        candidates = (
            amb.join(c, n)
            for n in range(start, start + carrier.period + 1)
            for c in range(amb.torsion_order)
        )
        for x in candidates:
            if carrier.member(x) and all(carrier.member(amb.add(x, g)) for g in points):
                return amb.neg(x) if flip else x
        raise VerificationError(f"no translate of {points} lies in T")


def validate_semigroup(s: PeriodicSet) -> SemigroupT:
    metrics = MetricsCollector()
    if s.is_empty():
        raise SemigroupError("carrier is empty")
    if s.is_finite():
        raise SemigroupError("carrier is finite; translatable semigroups are infinite")

    excess = minkowski_sum(s, s).difference(s)
    if not excess.is_empty():
        witness = excess.some_element()
        metrics.track_certification("closure", False)
        raise SemigroupError(f"carrier is not closed under addition: {witness} is a sum outside it")
    metrics.track_certification("closure", True)

    checked: List[tuple] = []
    for x in s.generators():
        if not s.difference(s.translate(x)).is_finite():
            metrics.track_certification("translatable", False)
            raise SemigroupError(f"carrier is not translatable at x = {x}")
        checked.append(x)
    metrics.track_certification("translatable", True)

    if not difference_subgroup(s).is_full():
        metrics.track_certification("grothendieck", False)
        raise SemigroupError("carrier does not generate the ambient group")
    metrics.track_certification("grothendieck", True)

    if s.has_right_tail() and s.has_left_tail():
        kind = CarrierKind.GROUP
    elif s.has_right_tail():
        kind = CarrierKind.POSITIVE
    else:
        kind = CarrierKind.NEGATIVE
    logger.debug("validated carrier", extra={"carrier": str(s), "kind": kind.value})
    return SemigroupT(carrier=s, kind=kind, translation_checks=tuple(checked))
