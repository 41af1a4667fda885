"""
Removal studies: every finite ``F`` of size at most ``k`` drawn from the window
of a basis and a few of its tail members, with the explicit bounds on the
orders of ``A ∖ F``, on the number of elements whose removal is costly, and on
``[G : ⟨A∖F − A∖F⟩]``.

Removing tail members leaves both the residue image and the tail patterns of
``A`` unchanged, so the order of ``A ∖ F`` only depends on ``F ∩ window``.
Tail members are still sampled so that mixed subsets are exercised.
"""

from __future__ import annotations

import itertools
import logging
import math
from typing import Dict, List, Optional

from src.core.abgroup import difference_subgroup
from src.core.config import settings
from src.core.errors import PreconditionError
from src.core.perset import GroupElement, PeriodicSet
from src.core.basis import bounds
from src.core.basis.order import basis_order
from src.core.basis.schema import Removal, RemovalStudy
from src.core.structure import SemigroupT

logger = logging.getLogger(__name__)


def removal_pool(a: PeriodicSet, tail_sample: Optional[int] = None) -> List[GroupElement]:
    count = settings.ADDBASIS_TAIL_SAMPLE if tail_sample is None else tail_sample
    return a.window_elements() + a.tail_elements(count)


def study_removal(a: PeriodicSet, t: SemigroupT, combo) -> Removal:
    rest = a.without(combo)
    h_f = difference_subgroup(rest)
    index = h_f.index()
    index_text = "inf" if index == math.inf else str(index)
    if not h_f.is_full():
        return Removal(removed=list(combo), regular=False, index=index_text)
    return Removal(
        removed=list(combo), regular=True, order=basis_order(rest, t), index=index_text
    )


def bound_audit(
    a: PeriodicSet,
    t: SemigroupT,
    h: int,
    k: int,
    tail_sample: Optional[int] = None,
) -> RemovalStudy:
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    order = basis_order(a, t)
    if order is None:
        raise PreconditionError(f"A = {a} is not a basis of T")
    if order != h:
        raise PreconditionError(f"A has order {order}, not {h}")

    pool = removal_pool(a, tail_sample)
    removals: List[Removal] = []
    violations: List[str] = []
    max_orders: Dict[int, int] = {}
    for size in range(1, k + 1):
        for combo in itertools.combinations(pool, size):
            r = study_removal(a, t, combo)
            removals.append(r)
            cap = bounds.index_cap(h, size)
            if r.index == "inf" or int(r.index) > cap:
                violations.append(f"index of {combo} is {r.index} > {cap}")
            if not r.regular:
                continue
            max_orders[size] = max(max_orders.get(size, 0), r.order)
            order_cap = bounds.x1_cap(h) if size == 1 else bounds.x2_cap(h, size)
            if r.order > order_cap:
                violations.append(f"removing {combo} gives order {r.order} > {order_cap}")

    singles = [r for r in removals if len(r.removed) == 1]
    bad = sum(1 for r in singles if not r.regular or r.order > 2 * h)
    s1 = bounds.s1_cap(h, t.is_group)
    if bad > s1:
        violations.append(f"{bad} elements push the order above {2 * h}, cap {s1}")

    bad_pairs = None
    if t.is_group and k >= 2:
        x = max([h] + [r.order for r in singles if r.regular])
        bad_pairs = sum(
            1
            for r in removals
            if len(r.removed) == 2 and r.regular and r.order > 2 * x
        )
        cap = bounds.s2_pair_cap(h, x)
        if bad_pairs > cap:
            violations.append(f"{bad_pairs} pairs push the order above {2 * x}, cap {cap}")

    if violations:
        logger.error("bound audit violations", extra={"candidate": str(a), "violations": violations})
    return RemovalStudy(
        order=h,
        k=k,
        group=t.is_group,
        removals=removals,
        max_orders=max_orders,
        bad_singletons=bad,
        bad_pairs=bad_pairs,
        violations=violations,
    )
