"""
Structure of translatable semigroups: either a group, or ``T = R + xℕ`` with
``R`` finite, which makes ``T`` differ from ``C ⊕ x'ℕ`` by a finite set
(``C`` the torsion subgroup, ``x' = (0, …, 0, ±1)``).
"""

from __future__ import annotations

import logging
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from src.core.abgroup import Reembedding, Subgroup, difference_subgroup, reembed
from src.core.errors import PreconditionError, VerificationError
from src.core.perset import (
    AmbientGroup,
    ElementField,
    GroupElement,
    PeriodicSet,
    SetField,
    minkowski_sum,
)
from src.core.structure.semigroup import CarrierKind, SemigroupT, validate_semigroup
from src.core.telemetry.metrics import MetricsCollector

logger = logging.getLogger(__name__)


class StructureReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: str
    torsion: Tuple[int, ...]
    x: Optional[ElementField] = None
    unit: Optional[ElementField] = None
    remainders: Optional[SetField] = None
    sym_diff: Optional[SetField] = None


def multiples(amb: AmbientGroup, x: GroupElement) -> PeriodicSet:
    """``xℕ = {0, x, 2x, …}`` for ``x`` of infinite order."""
    cx, nx = x[:-1], x[-1]
    if nx == 0:
        raise PreconditionError(f"{x} has finite order")
    order = amb.factors[-1] if amb.factors else 1
    step = abs(nx)

    def member(g: GroupElement) -> bool:
        k, r = divmod(g[-1], nx)
        if r or k < 0:
            return False
        return amb.normalize(list(g[:-1]) + [0]) == amb.scale(k, list(cx) + [0])

    return PeriodicSet.from_predicate(amb, step * order, 0, 1, member)


def half_space(amb: AmbientGroup, direction: str) -> PeriodicSet:
    """``C ⊕ x'ℕ`` with ``x' = (0, …, 0, ±1)`` pointing in ``direction``."""
    out = PeriodicSet.empty(amb)
    for t in amb.torsion_elements():
        out = out.union(PeriodicSet.progression(amb, t, 1, direction))
    return out


def structure_decompose(t: SemigroupT) -> StructureReport:
    amb = t.ambient
    carrier = t.carrier
    if t.is_group:
        if carrier != PeriodicSet.full(amb):
            raise VerificationError("group carrier differs from the ambient group")
        return StructureReport(kind="group", torsion=amb.factors)

    x = carrier.difference(carrier.negate()).some_element()
    remainders = carrier.difference(carrier.translate(x))
    if not remainders.is_finite():
        raise VerificationError(f"T \\ (x + T) is infinite for x = {x}")
    rebuilt = minkowski_sum(remainders, multiples(amb, x))
    ok = rebuilt == carrier
    MetricsCollector().track_certification("structure", ok)
    if not ok:
        raise VerificationError(f"T != R + xN for x = {x}")

    sign = 1 if t.kind == CarrierKind.POSITIVE else -1
    model = half_space(amb, "right" if sign > 0 else "left")
    sym = carrier.sym_diff(model)
    if not sym.is_finite():
        raise VerificationError("carrier is not cofinite in its half space")
    logger.debug(
        "decomposed carrier",
        extra={"x": x, "remainders": str(remainders), "sym_diff": str(sym)},
    )
    return StructureReport(
        kind="cofinite_to",
        torsion=amb.factors,
        x=x,
        unit=amb.join(0, sign),
        remainders=remainders,
        sym_diff=sym,
    )


def torsion_subgroup(amb: AmbientGroup) -> Subgroup:
    size = amb.rank + 1
    return Subgroup.generated_by(
        amb, [[int(i == j) for j in range(size)] for i in range(amb.rank)]
    )


def grothendieck(t: SemigroupT) -> Subgroup:
    """``⟨T - T⟩``; the ambient is the Grothendieck group, so anything else is a bug."""
    h = difference_subgroup(t.carrier)
    if not h.is_full():
        raise VerificationError(f"T - T generates {h.describe()}, not the ambient group")
    return h


def t_cap_H(t: SemigroupT, h: Subgroup) -> Tuple[SemigroupT, Reembedding]:
    """``T ∩ H`` over the reembedded ambient of ``H``, revalidated."""
    if not h.has_finite_index():
        raise PreconditionError("T ∩ H needs a subgroup of finite index")
    emb = reembed(h)
    inside = t.carrier.intersection(h.to_periodic())
    return validate_semigroup(emb.transport(inside)), emb
