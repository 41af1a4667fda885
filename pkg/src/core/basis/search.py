"""
Witness searches over small eventually periodic bases.

Candidates are ``W ∪ (Q + pℕ)`` (``Q + pℤ`` on group carriers) with ``Q`` a
nonempty set of residues mod ``p`` and ``W`` a set of window points, both of
size at most ``max_size``. They are enumerated by increasing period, then
window width, then total size; the first ``ADDBASIS_SEARCH_CUTOFF`` distinct
sets are examined exhaustively and a seeded random sample of the rest
follows. Results are reduced in enumeration order, so the report only
depends on the seed and the budget.
"""

from __future__ import annotations

import itertools
import logging
import random
from typing import Iterator, List, Optional, Tuple

from src.core.config import settings
from src.core.errors import PreconditionError
from src.core.perset import AmbientGroup, PeriodicSet, union_all
from src.core.pipeline import parallel_map
from src.core.basis import bounds
from src.core.basis.essential import essential_subsets
from src.core.basis.order import basis_order, ord_star
from src.core.basis.removal import study_removal
from src.core.basis.schema import (
    SearchBudget,
    SearchReport,
    SearchTarget,
    Witness,
)
from src.core.structure import SemigroupT
from src.core.telemetry.metrics import MeasureLatency

logger = logging.getLogger(__name__)

Point = Tuple[int, int]
RawCandidate = Tuple[int, Tuple[Point, ...], Tuple[Point, ...]]
# (value, order, removed or essentials) for a basis of order <= h
Outcome = Optional[Tuple[int, int, list]]


def _covered(w, q, p: int, line: bool) -> bool:
    """Some window point already lies on one of the tails."""
    return any(
        cq == c and n % p == r and (line or n >= r) for c, n in w for cq, r in q
    )


def iter_raw_candidates(
    amb: AmbientGroup, budget: SearchBudget, line: bool = False
) -> Iterator[RawCandidate]:
    cols = range(amb.torsion_order)
    window_points = [(c, n) for n in range(budget.max_window) for c in cols]
    windows = [
        combo
        for size in range(budget.max_size + 1)
        for combo in itertools.combinations(window_points, size)
    ]
    for p in range(1, budget.max_period + 1):
        residues = [(c, r) for r in range(p) for c in cols]
        tails = [
            combo
            for size in range(1, budget.max_size + 1)
            for combo in itertools.combinations(residues, size)
        ]
        block = []
        for w in windows:
            width = max((n for _, n in w), default=-1) + 1
            for q in tails:
                if _covered(w, q, p, line):
                    continue
                block.append(((width, len(w) + len(q)), w, q))
        block.sort(key=lambda entry: entry[0])
        for _, w, q in block:
            yield p, w, q


def build_candidate(amb: AmbientGroup, raw: RawCandidate, direction: str) -> PeriodicSet:
    p, w, q = raw
    window = PeriodicSet.finite(amb, [amb.join(c, n) for c, n in w])
    tails = union_all(
        amb, (PeriodicSet.progression(amb, amb.join(c, r), p, direction) for c, r in q)
    )
    return window.union(tails)


def select_candidates(
    t: SemigroupT, budget: SearchBudget, seed: int
) -> Tuple[List[PeriodicSet], bool]:
    """Distinct candidates to examine and whether the enumeration was complete."""
    amb = t.ambient
    direction = "line" if t.is_group else "right"
    flip = t.oriented() is not t
    cutoff = settings.ADDBASIS_SEARCH_CUTOFF
    rng = random.Random(seed)

    seen = set()
    chosen: List[PeriodicSet] = []
    sample: List[PeriodicSet] = []
    overflow = 0
    for raw in iter_raw_candidates(amb, budget, line=t.is_group):
        cand = build_candidate(amb, raw, direction)
        if flip:
            cand = cand.negate()
        if cand in seen:
            continue
        seen.add(cand)
        if len(chosen) < cutoff:
            chosen.append(cand)
            continue
        # reservoir sampling over everything past the cutoff
        overflow += 1
        if len(sample) < budget.samples:
            sample.append(cand)
        else:
            j = rng.randrange(overflow)
            if j < budget.samples:
                sample[j] = cand
    return chosen + sample, overflow == 0


def _evaluate(task) -> Outcome:
    candidate, t, h, k, target = task
    order = basis_order(candidate, t)
    if order is None or order > h:
        return None
    if target == SearchTarget.ESSENTIAL:
        family = essential_subsets(candidate, t, k)
        chosen = [list(e.elements) for e in family.essentials if len(e.elements) == k]
        return family.counts.get(k, 0), order, chosen
    best: Outcome = None
    for combo in itertools.combinations(candidate.window_elements(), k):
        r = study_removal(candidate, t, combo)
        if r.regular and (best is None or r.order > best[0]):
            best = (r.order, order, list(combo))
    return best if best is not None else (0, order, [])


def _is_naturals(t: SemigroupT) -> bool:
    amb = t.ambient
    return amb.rank == 0 and t.carrier == PeriodicSet.progression(amb, (0,), 1)


def witness_search(
    t: SemigroupT,
    h: int,
    k: int,
    budget: SearchBudget,
    target: SearchTarget = SearchTarget.REMOVAL,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> SearchReport:
    if h < 1 or k < 1:
        raise PreconditionError(f"search needs h >= 1 and k >= 1, got h={h}, k={k}")
    seed = settings.ADDBASIS_SEED if seed is None else seed
    with MeasureLatency(f"witness_search_{target.value}"):
        candidates, exhaustive = select_candidates(t, budget, seed)
        outcomes = parallel_map(
            _evaluate, [(c, t, h, k, target) for c in candidates], workers
        )

    violations: List[str] = []
    best_index = None
    bases = 0
    for i, outcome in enumerate(outcomes):
        if outcome is None:
            continue
        bases += 1
        value, order, _ = outcome
        if (
            target == SearchTarget.REMOVAL
            and k == 1
            and _is_naturals(t)
            and value > bounds.x1_nathanson_upper(order)
        ):
            violations.append(f"{candidates[i]} has removal order {value} above the bound")
        if target == SearchTarget.ESSENTIAL and k == 1 and value > bounds.grekos_cap(order):
            violations.append(f"{candidates[i]} has {value} essential elements at order {order}")
        if best_index is None or value > outcomes[best_index][0]:
            best_index = i

    best = None
    if best_index is not None:
        best = _certify(candidates[best_index], outcomes[best_index], t, target)
    logger.info(
        "witness search finished",
        extra={
            "target": target.value,
            "h": h,
            "k": k,
            "examined": len(candidates),
            "bases": bases,
            "best": best.value if best else None,
        },
    )
    return SearchReport(
        target=target,
        h=h,
        k=k,
        examined=len(candidates),
        bases=bases,
        exhaustive=exhaustive,
        best=best,
        violations=violations,
    )


def _certify(candidate: PeriodicSet, outcome, t: SemigroupT, target: SearchTarget) -> Witness:
    value, _, detail = outcome
    report = ord_star(candidate, t)
    if target == SearchTarget.ESSENTIAL:
        return Witness(
            candidate=candidate,
            order=report.order,
            value=value,
            essentials=detail,
            exceptional=report.exceptional,
        )
    removed_exceptional = None
    if detail:
        removed_exceptional = ord_star(candidate.without(detail), t).exceptional
    return Witness(
        candidate=candidate,
        order=report.order,
        value=value,
        removed=detail,
        exceptional=report.exceptional,
        removed_exceptional=removed_exceptional,
    )
