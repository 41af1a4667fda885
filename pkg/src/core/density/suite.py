"""Seeded random instances for the density audits."""

from __future__ import annotations

import logging
import random
from typing import Callable, Dict, List, Optional, Tuple

from src.core.config import settings
from src.core.errors import PreconditionError
from src.core.perset import PeriodicSet, union_all
from src.core.basis.corpus import random_basis
from src.core.density import audits
from src.core.density.schema import (
    DensityLemma,
    DensitySuiteReport,
    LemmaCheck,
    LemmaSummary,
)
from src.core.pipeline import parallel_map
from src.core.structure import SemigroupT
from src.core.telemetry.metrics import MeasureLatency

logger = logging.getLogger(__name__)


def random_periodic_set(
    t: SemigroupT,
    rng: random.Random,
    max_period: int = 6,
    max_window: int = 6,
    fill: Optional[float] = None,
) -> PeriodicSet:
    """A nonempty set with tails on the carrier's sides and a few window points."""
    amb = t.ambient
    fill = rng.uniform(0.2, 0.9) if fill is None else fill
    oriented = t.oriented()
    direction = "line" if t.is_group else "right"
    while True:
        p = rng.randint(1, max_period)
        tails = [
            PeriodicSet.progression(amb, amb.join(c, r), p, direction)
            for c in range(amb.torsion_order)
            for r in range(p)
            if rng.random() < fill
        ]
        points = [
            amb.join(c, n)
            for c in range(amb.torsion_order)
            for n in range(-max_window if t.is_group else 0, max_window)
            if rng.random() < fill / 2
        ]
        s = union_all(amb, tails).union(PeriodicSet.finite(amb, points))
        if oriented is not t:
            s = s.negate()
        if not s.is_empty():
            return s


def _inside(t: SemigroupT, rng: random.Random, fill: float) -> PeriodicSet:
    while True:
        s = random_periodic_set(t, rng, fill=fill).intersection(t.carrier)
        if not s.is_empty():
            return s


def _prehistoric(t, rng):
    a = _inside(t, rng, rng.uniform(0.4, 1.0))
    b = _inside(t, rng, rng.uniform(0.4, 1.0))
    return audits.prehistoric_audit(a, b, t, strict=False)


def _doubling(t, rng):
    b = random_periodic_set(t, rng, max_period=4)
    c = random_periodic_set(t, rng)
    return audits.doubling_audit(b, c, t, strict=False)


def _iterated(t, rng):
    a = random_periodic_set(t, rng, max_period=4, max_window=4)
    return audits.iterated_audit(a, t, rng.randint(1, 2), 2, strict=False)


def _stabilization(t, rng):
    a = random_periodic_set(t, rng, max_period=5, max_window=4)
    return audits.stabilization_audit(a, t, rng.randint(1, 2), strict=False)


def _translate_cover(t, rng):
    b = random_periodic_set(t, rng, max_period=5, max_window=4)
    pool = t.carrier.window_elements() + t.carrier.tail_elements(6)
    shifts = rng.sample(pool, rng.randint(1, min(2, len(pool))))
    return audits.translate_cover_audit(b, shifts, rng.randint(1, 2), t, strict=False)


def _low_density(t, rng):
    a = random_basis(t, rng, max_period=5, max_window=6)
    x = rng.choice(a.window_elements() + a.tail_elements(2))
    return audits.low_density_audit(a, x, t, strict=False)


INSTANCE_BUILDERS: Dict[DensityLemma, Callable[[SemigroupT, random.Random], LemmaCheck]] = {
    DensityLemma.PREHISTORIC: _prehistoric,
    DensityLemma.DOUBLING: _doubling,
    DensityLemma.ITERATED: _iterated,
    DensityLemma.STABILIZATION: _stabilization,
    DensityLemma.TRANSLATE_COVER: _translate_cover,
    DensityLemma.LOW_DENSITY: _low_density,
}


def _run(task: Tuple[DensityLemma, int, int, SemigroupT]) -> LemmaCheck:
    lemma, seed, i, t = task
    rng = random.Random(f"{seed}:{lemma.value}:{i}")
    return INSTANCE_BUILDERS[lemma](t, rng)


def density_lemma_suite(
    t: SemigroupT,
    instances: Optional[int] = None,
    seed: Optional[int] = None,
    lemmas: Optional[List[DensityLemma]] = None,
    workers: Optional[int] = None,
) -> DensitySuiteReport:
    instances = settings.ADDBASIS_RANDOM_INSTANCES if instances is None else instances
    seed = settings.ADDBASIS_SEED if seed is None else seed
    if instances < 1:
        raise PreconditionError(f"instances must be at least 1, got {instances}")
    chosen = list(INSTANCE_BUILDERS) if lemmas is None else lemmas

    summaries = []
    with MeasureLatency("density_lemma_suite"):
        for lemma in chosen:
            tasks = [(lemma, seed, i, t) for i in range(instances)]
            checks = parallel_map(_run, tasks, workers)
            summary = LemmaSummary(
                lemma=lemma,
                instances=len(checks),
                hypotheses_held=sum(1 for c in checks if c.hypotheses_hold),
                violations=[str(c.detail) for c in checks if c.violated],
            )
            logger.info(
                "density lemma audited",
                extra={
                    "lemma": lemma.value,
                    "instances": summary.instances,
                    "hypotheses_held": summary.hypotheses_held,
                    "violations": len(summary.violations),
                },
            )
            summaries.append(summary)
    return DensitySuiteReport(carrier=str(t.carrier), seed=seed, summaries=summaries)
