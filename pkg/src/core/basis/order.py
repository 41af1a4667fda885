"""
Orders of bases.

Let ``P = lcm(p_A, p_T)`` and work in ``Γ = C × ℤ/P``. The right pattern of
``hA`` is ``(h-1)Ā + Q_R`` (see ``perset.residue``), so ``T ⊆~ hA`` holds iff
that pattern contains the right pattern of ``T`` (and likewise on the left when
``T`` is a group). Iterating ``h = 1, 2, …`` in ``Γ`` finds the order without
materializing any sumset.

The search runs against a cap read off the instance. If the patterns of
``sA`` and ``(s+1)A`` share a class then ``sA ∩ (s+1)A`` is nonempty, and if
every far-out class of ``T`` is met by some ``iA`` with ``i <= h0`` then
``T ⊆~ A ∪ 2A ∪ … ∪ h0·A``. A basis covering ``T`` with the union of its first
``h0`` multiples and with ``sA ∩ (s+1)A ≠ ∅`` has order at most
``(h0 - 1)s + h0``. Both ``s`` and ``h0`` exist once ``⟨A - A⟩ = G`` and ``A``
has the tails ``T`` needs: the multiples ``i·Ā`` fill ``Γ`` after at most
``|Γ|`` steps.

The residue order is then certified with exact ``h``-fold sums.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from src.core.abgroup import difference_subgroup
from src.core.errors import VerificationError
from src.core.perset import PeriodicSet, ResidueProfile, h_fold, same_ambient
from src.core.perset.residue import (
    ClassSet,
    carrier_patterns,
    class_covers,
    class_intersection,
    class_union,
    common_modulus,
)
from src.core.basis.schema import BasisReport, NotBasisReason, Verdict
from src.core.structure import CarrierKind, SemigroupT
from src.core.telemetry.metrics import MetricsCollector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidueOrder:
    order: int
    cap: int
    s: int
    h0: int


def orient(a: PeriodicSet, t: SemigroupT):
    """Reflect a negative carrier and its candidate so tails point right."""
    if t.kind == CarrierKind.NEGATIVE:
        return a.negate(), t.oriented()
    return a, t


def precheck(a: PeriodicSet, t: SemigroupT) -> Optional[BasisReport]:
    """The not-a-basis verdicts that need no order search; ``None`` if none applies."""
    same_ambient(a.ambient, t.ambient)
    if a.is_empty():
        return BasisReport(verdict=Verdict.NOT_BASIS, reason=NotBasisReason.EMPTY)
    h = difference_subgroup(a)
    if not h.is_full():
        return BasisReport(
            verdict=Verdict.NOT_BASIS, reason=NotBasisReason.PROPER_SUBGROUP, subgroup=h
        )
    a, t = orient(a, t)
    if not a.has_right_tail():
        return BasisReport(verdict=Verdict.NOT_BASIS, reason=NotBasisReason.NO_POSITIVE_TAIL)
    if t.is_group and not a.has_left_tail():
        return BasisReport(verdict=Verdict.NOT_BASIS, reason=NotBasisReason.NO_NEGATIVE_TAIL)
    return None


def residue_order(a: PeriodicSet, t: SemigroupT) -> ResidueOrder:
    """Order of an oriented candidate that passed ``precheck``."""
    modulus = common_modulus(a, t.carrier)
    profile = ResidueProfile.of(a, modulus)
    t_right, t_left = carrier_patterns(t.carrier, modulus)
    two_sided = t.is_group
    size = a.ambient.torsion_order * modulus

    def covers(right: ClassSet, left: ClassSet) -> bool:
        return class_covers(right, t_right) and (
            not two_sided or class_covers(left, t_left)
        )

    multiple = profile.multiples(1)[0]
    rights: List[ClassSet] = []
    lefts: List[ClassSet] = []
    union_r = union_l = tuple(0 for _ in t_right)
    order = s = h0 = None
    i = 0
    while order is None or s is None or h0 is None:
        i += 1
        if i > size + 2:
            raise VerificationError(
                f"residue iteration did not settle after {size + 2} steps for A = {a}"
            )
        right, left = profile.fold_right(multiple), profile.fold_left(multiple)
        rights.append(right)
        lefts.append(left)
        union_r, union_l = class_union(union_r, right), class_union(union_l, left)
        if order is None and covers(right, left):
            order = i
        if h0 is None and covers(union_r, union_l):
            h0 = i
        if s is None and i >= 2:
            meets = any(class_intersection(rights[-2], right))
            if two_sided:
                meets = meets or any(class_intersection(lefts[-2], left))
            if meets:
                s = i - 1
        multiple = profile.fold_image(multiple)

    cap = (h0 - 1) * s + h0
    if order > cap:
        raise VerificationError(f"order {order} exceeds its certified cap {cap}")
    MetricsCollector().track_kernel("residue_order")
    return ResidueOrder(order=order, cap=cap, s=s, h0=h0)


def basis_order(a: PeriodicSet, t: SemigroupT) -> Optional[int]:
    """Uncertified order from the residue view; ``None`` when ``A`` is not a basis."""
    if precheck(a, t) is not None:
        return None
    a, t = orient(a, t)
    return residue_order(a, t).order


def ord_star(a: PeriodicSet, t: SemigroupT, certify: bool = True) -> BasisReport:
    rejected = precheck(a, t)
    if rejected is not None:
        logger.debug(
            "not a basis", extra={"candidate": str(a), "reason": rejected.reason.value}
        )
        return rejected

    oriented_a, oriented_t = orient(a, t)
    found = residue_order(oriented_a, oriented_t)
    h = found.order
    if not certify:
        return BasisReport(verdict=Verdict.BASIS, order=h, cap=found.cap)

    metrics = MetricsCollector()
    h_sum = h_fold(a, h)
    ok = t.carrier.subeq(h_sum)
    if ok and h > 1:
        ok = not t.carrier.subeq(h_fold(a, h - 1))
    metrics.track_certification("ord_star", ok)
    if not ok:
        logger.error(
            "order certificate failed",
            extra={"candidate": str(a), "carrier": str(t.carrier), "order": h},
        )
        raise VerificationError(f"h-fold sums do not certify order {h} for A = {a}")

    return BasisReport(
        verdict=Verdict.BASIS,
        order=h,
        cap=found.cap,
        certified=True,
        exceptional=t.carrier.difference(h_sum),
    )
