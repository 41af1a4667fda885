"""
Orders of the graded basis after dropping one element.

Every member of ``A`` other than the top block lives in the lower space
``Q = 𝔽_p^{(h-1)r}``, and the top block is all of the high part, so
``j(A ∖ {x}) = G`` exactly when ``(j-1)π(A ∖ {x}) = Q`` for the projection
``π`` onto ``Q``. Sums of ``π(A ∖ {x})`` are grown breadth first on the index
table of ``Q``.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

import numpy as np

from src.core.basis.bounds import exponent_cap, prime_power_exponent_cap
from src.core.errors import CapacityError, VerificationError
from src.core.fpt.essential import block_vectors
from src.core.fpt.graded import MAX_EXHAUSTIVE, remark_basis
from src.core.fpt.linalg import all_vectors, encode, missing_columns
from src.core.fpt.schema import RemovalOrderEntry, RemovalOrdersReport
from src.core.telemetry.metrics import MeasureLatency, MetricsCollector

logger = logging.getLogger(__name__)


def _sumset_steps(size: int, shifts: List[np.ndarray]) -> Optional[int]:
    """Least ``m`` with ``m · S = Q``, where ``shifts`` are the addition tables of ``S``."""
    reached = np.zeros(size, dtype=bool)
    reached[0] = True
    m = 0
    while not reached.all():
        grown = np.zeros(size, dtype=bool)
        for table in shifts:
            grown[table[reached]] = True
        if (grown == reached).all():
            return None
        reached = grown
        m += 1
    return m


def remark_removal_orders(p: int, r: int, h: int, D: int) -> RemovalOrdersReport:
    basis = remark_basis(p, r, h, D)
    n = (h - 1) * r
    if p**n > MAX_EXHAUSTIVE:
        raise CapacityError(f"lower space has {p}^{n} elements")

    quotient = all_vectors(p, n)
    lower: List[np.ndarray] = []
    owner: List[int] = []
    for j in range(h - 1):
        for v in block_vectors(basis, j)[:, :n]:
            if v.any():
                lower.append(v)
                owner.append(j)
    tables: Dict[int, np.ndarray] = {
        int(encode(v[None, :], p)[0]): encode((quotient + v) % p, p) for v in lower
    }
    identity = np.arange(len(quotient))

    entries = []
    with MeasureLatency("fpt_removal_orders"):
        for j, x in zip(owner, lower):
            code = int(encode(x[None, :], p)[0])
            kept = [v for v in lower if int(encode(v[None, :], p)[0]) != code]
            regular = not missing_columns(np.array(kept), p, n)
            order = None
            if regular:
                steps = _sumset_steps(
                    len(quotient),
                    [identity] + [t for c, t in tables.items() if c != code],
                )
                if steps is None:
                    raise VerificationError(
                        f"sums of A without {x.tolist()} stall although they span"
                    )
                order = steps + 1
            entries.append(
                RemovalOrderEntry(
                    block=j, element=[int(c) for c in x], regular=regular, order=order
                )
            )

    caps = {"exponent": exponent_cap(p, h, 1), "prime_power": prime_power_exponent_cap(p, h)}
    orders = [e.order for e in entries if e.order is not None]
    max_order = max(orders) if orders else None
    ok = all(o <= min(caps.values()) for o in orders)
    MetricsCollector().track_certification("fpt_removal_orders", ok)
    if not ok:
        logger.error(
            "removal order above cap",
            extra={"p": p, "r": r, "h": h, "max_order": max_order, "caps": caps},
        )
    logger.info(
        "removal orders computed",
        extra={"p": p, "r": r, "h": h, "entries": len(entries), "max_order": max_order},
    )
    return RemovalOrdersReport(
        p=p, r=r, h=h, D=D, entries=entries, max_order=max_order, caps=caps, ok=ok
    )
