"""
From a basis of ``T`` to a basis of ``G`` with the same essential subsets.

With ``F`` the union of the essential subsets of ``A``, ``B = A ∖ F``,
``H = ⟨B − B⟩`` and ``b ∈ B``, the set ``A' = F ∪ (H + b)`` is a basis of the
whole group. For ``E ⊆ F``, both ``A ∖ E`` and ``A' ∖ E`` are bases exactly when
``⟨F∖E − b + H⟩ = G``, so the two essential families coincide.
"""

from __future__ import annotations

import logging

from src.core.abgroup import difference_subgroup
from src.core.errors import VerificationError
from src.core.perset import PeriodicSet
from src.core.basis.essential import essential_subsets, reservoir
from src.core.basis.order import ord_star
from src.core.basis.schema import GroupBasisReport
from src.core.structure import SemigroupT, validate_semigroup

logger = logging.getLogger(__name__)


def _family(fam) -> list:
    return sorted(sorted(e.elements) for e in fam.essentials)


def derive_group_basis(a: PeriodicSet, t: SemigroupT) -> GroupBasisReport:
    amb = a.ambient
    size = max(1, len(reservoir(a, t).reservoir))
    family = essential_subsets(a, t, size)
    union = sorted({x for e in family.essentials for x in e.elements})
    if not union:
        return GroupBasisReport(trivial=True, order_t=family.order)

    rest = a.without(union)
    h = difference_subgroup(rest)
    b = rest.some_element()
    derived = PeriodicSet.finite(amb, union).union(h.to_periodic().translate(b))
    group = validate_semigroup(PeriodicSet.full(amb))

    report = ord_star(derived, group)
    if not report.is_basis or report.order > family.order:
        raise VerificationError(
            f"A' = {derived} is not a basis of G of order <= {family.order}"
        )
    derived_family = essential_subsets(derived, group, size)
    match = family.as_frozensets() == derived_family.as_frozensets()
    if not match:
        logger.error(
            "essential families differ",
            extra={"A": str(a), "derived": str(derived)},
        )
        raise VerificationError(f"essential subsets of A and A' = {derived} differ")
    return GroupBasisReport(
        trivial=False,
        union=union,
        derived=derived,
        order_t=family.order,
        order_g=report.order,
        essentials_t=_family(family),
        essentials_g=_family(derived_family),
        families_match=match,
    )
