"""
Reservoirs and essential subsets.

Let ``K0`` be generated by ``(0, …, 0, p)`` and the differences of the tail
class representatives of ``A``, and ``K* = a + K0`` for a tail member ``a``.
Every generator of ``K0`` is a difference of two tail members, so a coset
``y + H`` holding all but finitely many members of ``A`` contains two
members of each such difference and therefore contains ``K*``. Since ``A ∖ K*``
lies in the window, ``K*`` is the least such coset and ``A ∖ K*`` (the
reservoir) is finite.

An essential subset is contained in the reservoir: removing finitely many
elements of ``K*`` leaves differences generating ``K0`` together with the
rest of the reservoir, so whatever breaks ``⟨A∖E − A∖E⟩`` lies outside ``K*``.
Exceptional subsets form an upset, hence ``E`` is essential iff it is
exceptional and contains no smaller essential subset.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, List

from src.core.abgroup import Subgroup, difference_subgroup
from src.core.errors import PreconditionError, VerificationError
from src.core.perset import GroupElement, PeriodicSet
from src.core.basis import bounds
from src.core.basis.criterion import require_basis
from src.core.basis.schema import EssentialFamily, EssentialSubset, ReservoirReport
from src.core.structure import SemigroupT
from src.core.telemetry.metrics import MetricsCollector

logger = logging.getLogger(__name__)


def tail_coset(a: PeriodicSet):
    """``(base, K0)`` with ``K* = base + K0`` and the difference pairs generating ``K0``."""
    amb = a.ambient
    classes = a.tail_classes()
    if not classes:
        raise PreconditionError("a set without tails has no reservoir")
    reps = [a.tail_representative(*cls) for cls in classes]
    base = reps[0]
    # one period further out along the first tail
    step = amb.join(0, a.period if classes[0][0] == "right" else -a.period)
    witnesses = [(r, base) for r in reps[1:]]
    witnesses.append((amb.add(base, step), base))
    k0 = Subgroup.generated_by(amb, [amb.sub(x, y) for x, y in witnesses])
    return base, k0, witnesses


def reservoir(a: PeriodicSet, t: SemigroupT) -> ReservoirReport:
    require_basis(a, t)
    amb = a.ambient
    base, k0, witnesses = tail_coset(a)
    for x, y in witnesses:
        if not (a.member(x) and a.member(y)):
            raise VerificationError(f"coset generator {amb.sub(x, y)} is not a difference in A")
    MetricsCollector().track_certification("reservoir", True)
    outside = [w for w in a.window_elements() if not k0.member(amb.sub(w, base))]
    return ReservoirReport(
        base=k0.reduce(base), subgroup=k0, reservoir=outside, witnesses=witnesses
    )


def _check_essential(
    a: PeriodicSet, e: List[GroupElement], h_e: Subgroup, order: int
) -> None:
    amb = a.ambient
    if not h_e.has_finite_index() or not h_e.is_cyclic_quotient():
        raise VerificationError(f"G / H_E is not finite cyclic for E = {e}")
    rest = a.without(e)
    anchor = rest.some_element()
    for x in e:
        if not h_e.sum(Subgroup.generated_by(amb, [amb.sub(x, anchor)])).is_full():
            raise VerificationError(f"{x} - {anchor} does not generate G / H_E for E = {e}")
    cap = bounds.index_cap(order, len(e))
    if h_e.index() > cap:
        raise VerificationError(f"[G : H_E] = {h_e.index()} exceeds {cap} for E = {e}")


def essential_subsets(a: PeriodicSet, t: SemigroupT, k_max: int) -> EssentialFamily:
    if k_max < 1:
        raise PreconditionError(f"k_max must be at least 1, got {k_max}")
    order = require_basis(a, t)
    res = reservoir(a, t)
    pool = list(res.reservoir)

    found: List[frozenset] = []
    essentials: List[EssentialSubset] = []
    counts: Dict[int, int] = {}
    for k in range(1, min(k_max, len(pool)) + 1):
        counts[k] = 0
        for combo in itertools.combinations(pool, k):
            chosen = frozenset(combo)
            if any(prev <= chosen for prev in found):
                continue
            rest = a.without(combo)
            if rest.is_empty():
                continue
            h_e = difference_subgroup(rest)
            if h_e.is_full():
                continue
            _check_essential(a, list(combo), h_e, order)
            found.append(chosen)
            counts[k] += 1
            essentials.append(
                EssentialSubset(elements=list(combo), subgroup=h_e, index=h_e.index())
            )

    _check_counts(counts, order)
    _check_strict_subgroups(a, found)
    MetricsCollector().track_certification("essential_subsets", True)
    logger.debug(
        "essential subsets", extra={"order": order, "counts": counts, "reservoir": len(pool)}
    )
    return EssentialFamily(
        order=order,
        reservoir=res,
        essentials=essentials,
        counts={k: counts.get(k, 0) for k in range(1, k_max + 1)},
        k_max=k_max,
    )


def _check_counts(counts: Dict[int, int], order: int) -> None:
    if order == 1 and any(counts.values()):
        raise VerificationError("a basis of order 1 has an essential subset")
    if counts.get(1, 0) > bounds.grekos_cap(order):
        raise VerificationError(
            f"{counts[1]} essential elements exceed h - 1 = {order - 1}"
        )
    for k, n in counts.items():
        if k >= 2 and n > bounds.essential_count_cap(order, k):
            raise VerificationError(f"{n} essential {k}-subsets exceed (50 h log k)^k")


def _check_strict_subgroups(a: PeriodicSet, found: List[frozenset]) -> None:
    """Removing an essential set on top of ``F ⊉ E`` shrinks the difference group."""
    removed_sets = [frozenset()] + found
    for e in found:
        for f in removed_sets:
            if e <= f:
                continue
            outer = difference_subgroup(a.without(f))
            inner = difference_subgroup(a.without(e | f))
            if not inner.is_proper_subgroup_of(outer):
                raise VerificationError(
                    f"removing {sorted(e)} after {sorted(f)} does not shrink the difference group"
                )
