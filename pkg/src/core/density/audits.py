"""
Exact audits of the density lemmas behind the removal bounds.

Every audit evaluates the hypotheses of one lemma on a concrete instance with
``natural_density`` and, when they hold, checks the conclusion with exact set
operations. A failed conclusion under valid hypotheses is a bug in the kernels
and raises ``VerificationError`` unless ``strict`` is off.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Optional, Sequence

from src.core.abgroup import difference_subgroup
from src.core.errors import PreconditionError, VerificationError
from src.core.perset import (
    PeriodicSet,
    difference_set,
    h_fold,
    minkowski_sum,
    union_all,
)
from src.core.basis import bounds
from src.core.basis.order import basis_order, ord_star
from src.core.density.natural import natural_density
from src.core.density.schema import DensityLemma, LemmaCheck
from src.core.structure import SemigroupT
from src.core.telemetry.metrics import MetricsCollector

logger = logging.getLogger(__name__)


def _settle(check: LemmaCheck, strict: bool) -> LemmaCheck:
    MetricsCollector().track_certification(f"density_{check.lemma.value}", not check.violated)
    if check.violated:
        logger.error(
            "density lemma violated",
            extra={"lemma": check.lemma.value, "detail": check.detail},
        )
        if strict:
            raise VerificationError(f"{check.lemma.value} lemma failed on {check.detail}")
    return check


def _require_nonempty(*sets: PeriodicSet) -> None:
    if any(s.is_empty() for s in sets):
        raise PreconditionError("density audits need nonempty sets")


def prehistoric_audit(
    a: PeriodicSet, b: PeriodicSet, t: SemigroupT, strict: bool = True
) -> LemmaCheck:
    """``d(A) + d(B) > 1`` forces ``T ⊆ A − B``."""
    for s in (a, b):
        if not s.issubset(t.carrier):
            raise PreconditionError(f"{s} is not contained in T")
    da, db = natural_density(a, t), natural_density(b, t)
    detail = {"A": str(a), "B": str(b), "d(A)": str(da), "d(B)": str(db)}
    if da + db <= 1:
        return LemmaCheck(lemma=DensityLemma.PREHISTORIC, hypotheses_hold=False, detail=detail)
    covered = t.carrier.issubset(minkowski_sum(a, b.negate()))
    return _settle(
        LemmaCheck(
            lemma=DensityLemma.PREHISTORIC,
            hypotheses_hold=True,
            conclusion_holds=covered,
            detail=detail,
        ),
        strict,
    )


def doubling_audit(
    b: PeriodicSet, c: PeriodicSet, t: SemigroupT, strict: bool = True
) -> LemmaCheck:
    """Either ``d(B + C) >= 2 d(C)`` or ``B − B ⊆ C − C``."""
    _require_nonempty(b, c)
    d_sum = natural_density(minkowski_sum(b, c), t)
    d_c = natural_density(c, t)
    grows = d_sum >= 2 * d_c
    holds = grows or difference_set(b).issubset(difference_set(c))
    return _settle(
        LemmaCheck(
            lemma=DensityLemma.DOUBLING,
            hypotheses_hold=True,
            conclusion_holds=holds,
            detail={"B": str(b), "C": str(c), "d(B+C)": str(d_sum), "d(C)": str(d_c)},
        ),
        strict,
    )


def iterated_audit(
    a: PeriodicSet, t: SemigroupT, r: int, rounds: int, strict: bool = True
) -> LemmaCheck:
    """With ``s_i = 2^i r + 2^i − 1``: ``d(s_i A) >= 2^i d(rA)`` or ``s_{i-1}(A − A) = ⟨A − A⟩``."""
    if r < 1 or rounds < 0:
        raise PreconditionError(f"need r >= 1 and rounds >= 0, got r={r}, rounds={rounds}")
    _require_nonempty(a)
    generated = difference_subgroup(a).to_periodic()
    diffs = difference_set(a)
    d_r = natural_density(h_fold(a, r), t)

    failed: Optional[int] = None
    for i in range(rounds + 1):
        s_i = 2**i * r + 2**i - 1
        if natural_density(h_fold(a, s_i), t) >= 2**i * d_r:
            continue
        s_prev = 2 ** (i - 1) * r + 2 ** (i - 1) - 1 if i else None
        if s_prev is not None and h_fold(diffs, s_prev) == generated:
            continue
        failed = i
        break
    detail = {"A": str(a), "r": str(r), "rounds": str(rounds)}
    if failed is not None:
        detail["failed_round"] = str(failed)
    return _settle(
        LemmaCheck(
            lemma=DensityLemma.ITERATED,
            hypotheses_hold=True,
            conclusion_holds=failed is None,
            detail=detail,
        ),
        strict,
    )


def stabilization_steps(a: PeriodicSet, limit: int) -> Optional[int]:
    """Least ``s <= limit`` with ``s(A − A) = ⟨A − A⟩``."""
    generated = difference_subgroup(a).to_periodic()
    diffs = difference_set(a)
    current = diffs
    for s in range(1, limit + 1):
        if current == generated:
            return s
        current = minkowski_sum(current, diffs)
    return None


def stabilization_audit(
    a: PeriodicSet, t: SemigroupT, h: int, strict: bool = True
) -> LemmaCheck:
    """``d(hA) = α > 0`` gives ``sA − sA = ⟨A − A⟩`` for some ``s <= (h+1)/α − 1``."""
    if h < 1:
        raise PreconditionError(f"h must be at least 1, got {h}")
    _require_nonempty(a)
    alpha = natural_density(h_fold(a, h), t)
    detail = {"A": str(a), "h": str(h), "d(hA)": str(alpha)}
    if alpha == 0:
        return LemmaCheck(lemma=DensityLemma.STABILIZATION, hypotheses_hold=False, detail=detail)
    limit = math.floor(Fraction(h + 1) / alpha - 1)
    s = stabilization_steps(a, limit)
    detail["bound"] = str(limit)
    detail["s"] = str(s)
    return _settle(
        LemmaCheck(
            lemma=DensityLemma.STABILIZATION,
            hypotheses_hold=True,
            conclusion_holds=s is not None,
            detail=detail,
        ),
        strict,
    )


def translate_cover_audit(
    b: PeriodicSet,
    shifts: Sequence[Sequence[int]],
    h: int,
    t: SemigroupT,
    strict: bool = True,
) -> LemmaCheck:
    """``⟨B − B⟩ = G`` and ``T ⊆~ ⋃ (x_i + hB)`` give ``ord*(B) <= h + m²(h+1) − m``."""
    if h < 1 or not shifts:
        raise PreconditionError("translate cover needs h >= 1 and at least one shift")
    _require_nonempty(b)
    for x in shifts:
        if not t.carrier.member(x):
            raise PreconditionError(f"shift {tuple(x)} is not in T")
    m = len(shifts)
    cap = bounds.nathnash_cap(h, m)
    hb = h_fold(b, h)
    cover = union_all(b.ambient, (hb.translate(x) for x in shifts))
    hypotheses = difference_subgroup(b).is_full() and t.carrier.subeq(cover)
    detail = {"B": str(b), "h": str(h), "m": str(m), "cap": str(cap)}
    if not hypotheses:
        return LemmaCheck(
            lemma=DensityLemma.TRANSLATE_COVER, hypotheses_hold=False, detail=detail
        )
    report = ord_star(b, t)
    detail["order"] = str(report.order)
    return _settle(
        LemmaCheck(
            lemma=DensityLemma.TRANSLATE_COVER,
            hypotheses_hold=True,
            conclusion_holds=report.is_basis and report.order <= cap,
            detail=detail,
        ),
        strict,
    )


def low_density_audit(
    a: PeriodicSet,
    x: Sequence[int],
    t: SemigroupT,
    h: Optional[int] = None,
    strict: bool = True,
) -> LemmaCheck:
    """``T ⊆~ hA`` and ``d(T ∖ h(A∖{x})) < 1/h`` give ``T ⊆~ 2h(A∖{x})``."""
    if not a.member(x):
        raise PreconditionError(f"{tuple(x)} is not in A")
    if h is None:
        h = basis_order(a, t)
        if h is None:
            raise PreconditionError(f"A = {a} is not a basis of T")
    rest = a.without([x])
    detail = {"A": str(a), "x": str(tuple(x)), "h": str(h)}
    if rest.is_empty() or not t.carrier.subeq(h_fold(a, h)):
        return LemmaCheck(lemma=DensityLemma.LOW_DENSITY, hypotheses_hold=False, detail=detail)
    missing = natural_density(t.carrier.difference(h_fold(rest, h)), t)
    detail["d(T \\ h(A-x))"] = str(missing)
    if missing >= Fraction(1, h):
        return LemmaCheck(lemma=DensityLemma.LOW_DENSITY, hypotheses_hold=False, detail=detail)
    return _settle(
        LemmaCheck(
            lemma=DensityLemma.LOW_DENSITY,
            hypotheses_hold=True,
            conclusion_holds=t.carrier.subeq(h_fold(rest, 2 * h)),
            detail=detail,
        ),
        strict,
    )
