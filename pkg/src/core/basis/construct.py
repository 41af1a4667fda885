"""
Bases of prescribed exact order.

Candidates are tried in a fixed order and each one is certified with
``ord_star``; the first whose order is exactly ``h`` is returned.

1. ``R ∪ {x} ∪ (hx)ℕ`` from the decomposition ``T = R + xℕ``.
2. ``t0 + ({x'} ∪ (C + h·x'ℕ))`` where ``x' = (0, …, 0, 1)`` and ``t0 = (0, …, 0, N)``
   with ``C × [N, ∞) ⊆ T``. Its ``h``-fold sums cover ``C × [hN, ∞)`` while
   ``(h-1)``-fold sums miss the class ``(h-1)(N+1)`` mod ``h`` beyond a point.
   On a group the translate is dropped and the tail becomes ``C + h·x'ℤ``.
3. ``R ∪ {x, 2x, …, jx} ∪ (mx)ℕ`` for small ``j < m``.
"""

from __future__ import annotations

import logging
from typing import Iterator, List, Tuple

from src.core.errors import PreconditionError, VerificationError
from src.core.perset import AmbientGroup, PeriodicSet, union_all
from src.core.basis.order import ord_star
from src.core.basis.schema import ConstructionReport
from src.core.structure import (
    SemigroupT,
    half_space,
    multiples,
    structure_decompose,
)

logger = logging.getLogger(__name__)

Candidate = Tuple[str, PeriodicSet]


def _torsion_progressions(amb: AmbientGroup, n: int, step: int, direction: str) -> PeriodicSet:
    return union_all(
        amb,
        (
            PeriodicSet.progression(amb, amb.join(c, n), step, direction)
            for c in range(amb.torsion_order)
        ),
    )


def threshold(t: SemigroupT) -> int:
    """Least ``N >= 0`` with ``C × [N, ∞) ⊆ T`` for a positive carrier."""
    gaps = half_space(t.ambient, "right").difference(t.carrier)
    if gaps.is_empty():
        return 0
    return max(g[-1] for g in gaps.elements()) + 1


def _candidates(t: SemigroupT, h: int) -> Iterator[Candidate]:
    amb = t.ambient
    unit = amb.join(0, 1)
    if t.is_group:
        yield "unit_plus_lines", PeriodicSet.finite(amb, [unit]).union(
            _torsion_progressions(amb, 0, h, "line")
        )
        for m in range(h, 2 * h + 1):
            for j in range(1, m):
                steps = PeriodicSet.finite(amb, [amb.join(0, i) for i in range(j + 1)])
                yield f"steps_{j}_lines_{m}", steps.union(
                    _torsion_progressions(amb, 0, m, "line")
                )
        return

    decomposition = structure_decompose(t)
    x, remainders = decomposition.x, decomposition.remainders
    yield "remainders_plus_multiples", remainders.union(
        PeriodicSet.finite(amb, [x])
    ).union(multiples(amb, amb.scale(h, x)))

    n = threshold(t)
    start = amb.join(0, n)
    yield "translated_product", PeriodicSet.finite(amb, [amb.add(start, unit)]).union(
        _torsion_progressions(amb, n, h, "right")
    )

    for m in range(h, 2 * h + 1):
        for j in range(1, m):
            steps = PeriodicSet.finite(amb, [amb.scale(i, x) for i in range(1, j + 1)])
            yield f"steps_{j}_multiples_{m}", remainders.union(steps).union(
                multiples(amb, amb.scale(m, x))
            )


def construct_exact_order_basis(t: SemigroupT, h: int) -> ConstructionReport:
    if h < 2:
        raise PreconditionError(f"construction needs h >= 2, got {h}")
    flipped = t.oriented() is not t
    work = t.oriented()

    attempts: List[str] = []
    for method, candidate in _candidates(work, h):
        if flipped:
            candidate = candidate.negate()
        report = ord_star(candidate, t)
        attempts.append(f"{method}: {report.order if report.is_basis else report.reason.value}")
        if report.is_basis and report.order == h:
            logger.debug("constructed basis", extra={"method": method, "h": h})
            return ConstructionReport(
                h=h, method=method, candidate=candidate, order=h, attempts=attempts
            )
    raise VerificationError(f"no candidate certified order {h}: {'; '.join(attempts)}")
