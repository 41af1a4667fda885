"""
Seeded comparison of the sum kernels against the windowed brute force.

Each instance draws an ambient with ``|C| <= 8``, two sets and an ``h <= 6``
from ``random.Random(f"{seed}:oracle:{i}")``. ``A + B`` is compared on
``[-5ph - 50, 5ph + 50]`` and ``h_fold`` is compared step by step, each
``kA`` against the brute sum of ``A`` and the already checked ``(k-1)A``.
"""

from __future__ import annotations

import logging
import random
from typing import Optional, Tuple

from src.core.config import settings
from src.core.errors import PreconditionError
from src.core.perset import h_fold, minkowski_sum
from src.core.perset.oracle import check_window, random_ambient, random_set, sum_agrees
from src.core.pipeline.pool import parallel_map
from src.core.pipeline.schema import CorpusAudit, CorpusAuditReport, InstanceResult
from src.core.telemetry.metrics import MeasureLatency, MetricsCollector

logger = logging.getLogger(__name__)

MAX_FOLD = 6


def _compare(task: Tuple[int, int, int, int]) -> InstanceResult:
    seed, i, max_period, max_window = task
    rng = random.Random(f"{seed}:oracle:{i}")
    amb = random_ambient(rng)
    a = random_set(amb, rng, max_period, max_window)
    b = random_set(amb, rng, max_period, max_window)
    h = rng.randint(1, MAX_FOLD)
    start, stop = check_window(max(a.period, b.period), h)
    label = f"{a} | {b}"

    if not sum_agrees(a, b, minkowski_sum(a, b), start, stop):
        return InstanceResult(candidate=label, order=h, ok=False, note="A + B differs")
    previous = a
    for k in range(2, h + 1):
        current = h_fold(a, k)
        if not sum_agrees(a, previous, current, start, stop):
            return InstanceResult(candidate=label, order=h, value=k, ok=False, note=f"{k}A differs")
        previous = current
    return InstanceResult(candidate=label, order=h, value=h)


def sumset_oracle_audit(
    pairs: int,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    max_period: int = 12,
    max_window: int = 24,
) -> CorpusAuditReport:
    if pairs < 1:
        raise PreconditionError(f"pairs must be at least 1, got {pairs}")
    seed = settings.ADDBASIS_SEED if seed is None else seed
    tasks = [(seed, i, max_period, max_window) for i in range(pairs)]
    with MeasureLatency("sumset_oracle"):
        results = parallel_map(_compare, tasks, workers)
    report = CorpusAuditReport(
        audit=CorpusAudit.ORACLE, carrier="C + Z, |C| <= 8", seed=seed, results=results
    )
    MetricsCollector().track_certification("sumset_oracle", report.ok)
    if not report.ok:
        logger.error(
            "sum kernels disagree with brute force",
            extra={"pairs": [r.candidate for r in report.violations]},
        )
    return report
