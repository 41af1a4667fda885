"""
Removing finite subsets from a basis.

``A ∖ F`` stays a basis of ``T`` exactly when ``⟨(A∖F) − (A∖F)⟩ = G``: a sumset
``ℓ(A∖F)`` lies in a single coset of that subgroup, and conversely a basis
with full difference group keeps covering ``T`` after losing finitely many
elements. Removing finitely many elements never touches a tail, so the
criterion only needs the difference subgroup.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable, Sequence, Union

from src.core.abgroup import Subgroup, difference_subgroup
from src.core.errors import PreconditionError, VerificationError
from src.core.perset import PeriodicSet, same_ambient
from src.core.basis.order import basis_order, ord_star
from src.core.basis.schema import Removal
from src.core.structure import SemigroupT

logger = logging.getLogger(__name__)

FiniteSet = Union[PeriodicSet, Iterable[Sequence[int]]]


def as_finite(a: PeriodicSet, f: FiniteSet) -> PeriodicSet:
    """``F`` as a finite periodic set inside ``A``."""
    if not isinstance(f, PeriodicSet):
        f = PeriodicSet.finite(a.ambient, f)
    same_ambient(a.ambient, f.ambient)
    if not f.is_finite():
        raise PreconditionError("removed set F must be finite")
    if not f.issubset(a):
        missing = f.difference(a).some_element()
        raise PreconditionError(f"F is not a subset of A: {missing} is missing")
    return f


def require_basis(a: PeriodicSet, t: SemigroupT) -> int:
    order = basis_order(a, t)
    if order is None:
        raise PreconditionError(f"A = {a} is not a basis of T")
    return order


def removal_subgroup(a: PeriodicSet, f: PeriodicSet) -> Subgroup:
    """``⟨A∖F − A∖F⟩``; ``A ∖ F`` is assumed nonempty."""
    return difference_subgroup(a.difference(f))


def erdos_graham(a: PeriodicSet, f: FiniteSet, t: SemigroupT) -> bool:
    f = as_finite(a, f)
    require_basis(a, t)
    rest = a.difference(f)
    if rest.is_empty():
        return False
    return difference_subgroup(rest).is_full()


def removal_order(
    a: PeriodicSet, f: FiniteSet, t: SemigroupT, certify: bool = True
) -> Removal:
    f = as_finite(a, f)
    regular = erdos_graham(a, f, t)
    removed = f.elements()
    rest = a.difference(f)
    index = removal_subgroup(a, f).index() if not rest.is_empty() else math.inf
    index_text = "inf" if index == math.inf else str(index)
    if not regular:
        return Removal(removed=removed, regular=False, index=index_text)

    report = ord_star(rest, t, certify=certify)
    if not report.is_basis:
        raise VerificationError(
            f"A \\ F has full difference group but was rejected: {report.reason}"
        )
    logger.debug(
        "removal order", extra={"removed": [str(x) for x in removed], "order": report.order}
    )
    return Removal(removed=removed, regular=True, order=report.order, index=index_text)
