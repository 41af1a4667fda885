"""
Bases split along a subgroup of finite index.

For ``A = F ∪ B`` with ``⟨B − B⟩ = H`` of finite index and ``b ∈ B``, ``A`` is a
basis of ``T`` iff ``B − b`` is a basis of ``T ∩ H`` (as a semigroup of ``H``)
and ``F − b`` generates ``G / H``. With ``h1`` the least number of summands
from ``(F − b) ∪ {0}`` meeting every coset and ``h2`` the order of ``B − b``,
the order of ``A`` lies in ``[h1 + 1, h1 + h2]``.
"""

from __future__ import annotations

import logging
from typing import Sequence, Set

from src.core.abgroup import Subgroup, difference_subgroup
from src.core.errors import PreconditionError
from src.core.perset import GroupElement, PeriodicSet, same_ambient
from src.core.basis.criterion import FiniteSet, as_finite, require_basis
from src.core.basis.order import ord_star
from src.core.basis.schema import NNAudit, TwoBasesAudit
from src.core.structure import SemigroupT, t_cap_H

logger = logging.getLogger(__name__)


def coset_cover_steps(h: Subgroup, shifts: Sequence[GroupElement]) -> int:
    """Least ``j`` with ``j((shifts) ∪ {0}) + H = G``."""
    amb = h.ambient
    index = h.index()
    steps = {h.reduce(x) for x in shifts} | {h.reduce(amb.zero())}
    reached: Set[GroupElement] = {h.reduce(amb.zero())}
    j = 0
    while len(reached) < index:
        grown = {h.reduce(amb.add(u, v)) for u in reached for v in steps}
        if grown == reached:
            raise PreconditionError("F - b does not generate G / H")
        reached = grown
        j += 1
    return j


def inner_order(b_set: PeriodicSet, b: GroupElement, t: SemigroupT, h: Subgroup):
    """``ord*`` of ``B − b`` inside ``T ∩ H`` after reembedding ``H``."""
    amb = b_set.ambient
    inner_t, emb = t_cap_H(t, h)
    transported = emb.transport(b_set.translate(amb.neg(b)))
    return ord_star(transported, inner_t), transported


def twobases_audit(
    f: FiniteSet, b_set: PeriodicSet, b: Sequence[int], t: SemigroupT
) -> TwoBasesAudit:
    amb = same_ambient(b_set.ambient, t.ambient)
    b = amb.normalize(b)
    if not b_set.member(b):
        raise PreconditionError(f"b = {b} is not in B")
    if not isinstance(f, PeriodicSet):
        f = PeriodicSet.finite(amb, f)
    if not f.is_finite():
        raise PreconditionError("F must be finite")
    if not f.intersection(b_set).is_empty():
        raise PreconditionError("F and B must be disjoint")
    h = difference_subgroup(b_set)
    if not h.has_finite_index():
        raise PreconditionError("<B - B> must have finite index")

    shifts = [amb.sub(x, b) for x in f.elements()]
    if not h.sum(Subgroup.generated_by(amb, shifts)).is_full():
        raise PreconditionError("<F - b + H> is not G")
    h1 = coset_cover_steps(h, shifts)

    inner, _ = inner_order(b_set, b, t, h)
    whole = ord_star(f.union(b_set), t)
    h2 = inner.order if inner.is_basis else None
    order = whole.order if whole.is_basis else None
    ok = h2 is not None and order is not None and h1 + 1 <= order <= h1 + h2
    if not ok:
        logger.error(
            "two-bases sandwich failed",
            extra={"h1": h1, "h2": h2, "h": order, "B": str(b_set), "F": str(f)},
        )
    return TwoBasesAudit(h1=h1, h2=h2, h=order, index=h.index(), ok=ok)


def lemma_nn_audit(a: PeriodicSet, f: FiniteSet, t: SemigroupT) -> NNAudit:
    f = as_finite(a, f)
    require_basis(a, t)
    rest = a.difference(f)
    if not rest.has_right_tail() and not rest.has_left_tail():
        raise PreconditionError("A \\ F must be infinite")
    h = difference_subgroup(rest)
    if not h.has_finite_index():
        raise PreconditionError("<B - B> must have finite index")
    b = rest.some_element()
    inner, transported = inner_order(rest, b, t, h)
    return NNAudit(
        subgroup=h,
        index=h.index(),
        b=b,
        transported=transported,
        order=inner.order,
        holds=inner.is_basis,
    )
