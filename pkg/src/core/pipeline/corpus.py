"""
Bound audits over seeded random corpora of bases.

Each instance draws its own basis from ``random.Random(f"{seed}:{audit}:{i}")``
so results do not depend on the worker count.
"""

from __future__ import annotations

import logging
import random
from typing import Callable, Dict, Optional, Tuple

from src.core.config import settings
from src.core.errors import PreconditionError, VerificationError
from src.core.perset import PeriodicSet
from src.core.basis import (
    bounds,
    derive_group_basis,
    erdos_graham,
    lemma_nn_audit,
    reservoir,
    twobases_audit,
)
from src.core.basis.corpus import random_basis, random_split
from src.core.basis.order import basis_order, ord_star
from src.core.basis.removal import bound_audit, removal_pool
from src.core.pipeline.pool import parallel_map
from src.core.pipeline.schema import CorpusAudit, CorpusAuditReport, InstanceResult
from src.core.structure import SemigroupT
from src.core.telemetry.metrics import MeasureLatency, MetricsCollector

logger = logging.getLogger(__name__)

# bases above these orders make removal studies slow without adding coverage
MAX_AUDIT_ORDER: Dict[CorpusAudit, int] = {
    CorpusAudit.S1: 4,
    CorpusAudit.S2: 3,
    CorpusAudit.X1: 4,
    CorpusAudit.X2: 4,
}
RESERVOIR_DRAWS = 50


def _removal_audit(a: PeriodicSet, t: SemigroupT, h: int, audit: CorpusAudit) -> InstanceResult:
    k = 1 if audit in (CorpusAudit.S1, CorpusAudit.X1) else 2
    study = bound_audit(a, t, h, k)
    if audit == CorpusAudit.X1:
        value, cap = study.max_orders.get(1), bounds.x1_cap(h)
    elif audit == CorpusAudit.X2:
        value, cap = study.max_orders.get(2), bounds.x2_cap(h, 2)
    elif audit == CorpusAudit.S1:
        value, cap = study.bad_singletons, bounds.s1_cap(h, t.is_group)
    else:
        x = max(h, study.max_orders.get(1, 0))
        value, cap = study.bad_pairs, bounds.s2_pair_cap(h, x)
    return InstanceResult(
        candidate=str(a),
        order=h,
        value=value,
        cap=cap,
        ok=study.ok,
        note="; ".join(study.violations),
    )


def _nn(a: PeriodicSet, t: SemigroupT, h: int, rng: random.Random) -> InstanceResult:
    f = reservoir(a, t).reservoir or a.window_elements()[:1]
    if not f:
        return InstanceResult(candidate=str(a), order=h, skipped=True, note="nothing to remove")
    audit = lemma_nn_audit(a, f, t)
    return InstanceResult(
        candidate=str(a),
        order=h,
        value=audit.order,
        ok=audit.holds,
        note=f"F={f} index={audit.index}",
    )


def _erdos_graham(a: PeriodicSet, t: SemigroupT, h: int, rng: random.Random) -> InstanceResult:
    pool = removal_pool(a)
    f = rng.sample(pool, rng.randint(1, min(2, len(pool))))
    verdict = erdos_graham(a, f, t)
    finite = ord_star(a.without(f), t).is_basis
    return InstanceResult(
        candidate=str(a),
        order=h,
        value=int(verdict),
        ok=verdict == finite,
        note=f"F={f} criterion={verdict} order finite={finite}",
    )


def _correspondence(a: PeriodicSet, t: SemigroupT, h: int, rng: random.Random) -> InstanceResult:
    try:
        report = derive_group_basis(a, t)
    except VerificationError as exc:
        return InstanceResult(candidate=str(a), order=h, ok=False, note=str(exc))
    return InstanceResult(
        candidate=str(a),
        order=h,
        value=len(report.essentials_t),
        ok=report.families_match,
        note=f"A'={report.derived}",
    )


_INSTANCE: Dict[
    CorpusAudit, Callable[[PeriodicSet, SemigroupT, int, random.Random], InstanceResult]
] = {
    CorpusAudit.NN: _nn,
    CorpusAudit.EG: _erdos_graham,
    CorpusAudit.EGT: _correspondence,
}


def _sandwich(t: SemigroupT, rng: random.Random) -> InstanceResult:
    f, b_set, b = random_split(t, rng)
    audit = twobases_audit(f, b_set, b, t)
    cap = audit.h1 + audit.h2 if audit.h2 is not None else None
    return InstanceResult(
        candidate=f"F={f} B={b_set} b={b}",
        order=audit.h,
        value=audit.h,
        cap=cap,
        ok=audit.ok,
        note=f"h1={audit.h1} h2={audit.h2} index={audit.index}",
    )


def _draw(audit: CorpusAudit, t: SemigroupT, rng: random.Random) -> PeriodicSet:
    a = random_basis(t, rng, max_period=4, max_window=6)
    if audit != CorpusAudit.EGT:
        return a
    for _ in range(RESERVOIR_DRAWS):
        if reservoir(a, t).reservoir:
            return a
        a = random_basis(t, rng, max_period=4, max_window=6)
    return a


def _run(task: Tuple[CorpusAudit, SemigroupT, int, int]) -> InstanceResult:
    audit, t, seed, i = task
    rng = random.Random(f"{seed}:{audit.value}:{i}")
    try:
        if audit == CorpusAudit.TWOBASES:
            return _sandwich(t, rng)
        a = _draw(audit, t, rng)
    except PreconditionError as exc:
        return InstanceResult(candidate=str(t.carrier), skipped=True, note=str(exc))
    h = basis_order(a, t)
    if h > MAX_AUDIT_ORDER.get(audit, h):
        return InstanceResult(candidate=str(a), order=h, skipped=True, note="order too large")
    try:
        if audit in _INSTANCE:
            return _INSTANCE[audit](a, t, h, rng)
        return _removal_audit(a, t, h, audit)
    except PreconditionError as exc:
        return InstanceResult(candidate=str(a), order=h, skipped=True, note=str(exc))


def corpus_audit(
    audit: CorpusAudit,
    t: SemigroupT,
    count: int,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> CorpusAuditReport:
    if count < 1:
        raise PreconditionError(f"count must be at least 1, got {count}")
    if audit == CorpusAudit.ORACLE:
        raise PreconditionError("the sum oracle does not draw bases of a carrier")
    if audit == CorpusAudit.S2 and not t.is_group:
        raise PreconditionError("the pair count audit needs a group carrier")
    seed = settings.ADDBASIS_SEED if seed is None else seed

    with MeasureLatency(f"corpus_audit_{audit.value}"):
        results = parallel_map(_run, [(audit, t, seed, i) for i in range(count)], workers)
    report = CorpusAuditReport(audit=audit, carrier=str(t.carrier), seed=seed, results=results)
    MetricsCollector().track_certification(f"corpus_{audit.value}", report.ok)
    if not report.ok:
        logger.error(
            "corpus audit violations",
            extra={"audit": audit.value, "violations": [r.candidate for r in report.violations]},
        )
    logger.info(
        "corpus audit finished",
        extra={"audit": audit.value, "checked": report.checked, "instances": count},
    )
    return report
