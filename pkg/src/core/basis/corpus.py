"""Seeded random bases for audits and the standard carriers they run on."""

from __future__ import annotations

import random
from typing import Dict, List, Tuple

from src.core.errors import PreconditionError
from src.core.abgroup import Subgroup
from src.core.perset import AmbientGroup, GroupElement, PeriodicSet, parse_set, union_all
from src.core.basis.order import basis_order
from src.core.basis.search import Point, build_candidate
from src.core.structure import SemigroupT, validate_semigroup

STANDARD_CARRIERS: Dict[str, str] = {
    "N": "0+1N",
    "Z": "0+1Z",
    "C2+N": "C=2; (0)0+1N, (1)0+1N",
    "<3,5>": "{0,3,5,6}, 8+1N",
}


def standard_carrier(name: str) -> SemigroupT:
    if name not in STANDARD_CARRIERS:
        raise PreconditionError(f"unknown carrier {name!r}")
    return validate_semigroup(parse_set(STANDARD_CARRIERS[name]))


def _residues(rng: random.Random, cols: int, p: int, max_size: int) -> Tuple[Point, ...]:
    residues = [(c, r) for c in range(cols) for r in range(p)]
    return tuple(rng.sample(residues, rng.randint(1, min(max_size, len(residues)))))


def random_basis(
    t: SemigroupT,
    rng: random.Random,
    max_period: int = 6,
    max_window: int = 8,
    max_size: int = 3,
    attempts: int = 1000,
) -> PeriodicSet:
    """
    A basis ``W ∪ (Q + pℕ)`` of ``t`` drawn at random.

    On group carriers half of the draws use lines ``Q + pℤ`` and the other
    half independent right and left tails ``(Q + pℕ) ∪ (Q' − pℕ)``.
    """
    amb = t.ambient
    cols = amb.torsion_order
    flip = t.oriented() is not t
    for _ in range(attempts):
        p = rng.randint(1, max_period)
        q = _residues(rng, cols, p, max_size)
        points = [(c, n) for c in range(cols) for n in range(max_window)]
        w = tuple(rng.sample(points, rng.randint(0, min(max_size, len(points)))))
        if not t.is_group:
            cand = build_candidate(amb, (p, w, q), "right")
        elif rng.random() < 0.5:
            cand = build_candidate(amb, (p, w, q), "line")
        else:
            left = build_candidate(amb, (p, (), _residues(rng, cols, p, max_size)), "left")
            cand = build_candidate(amb, (p, w, q), "right").union(left)
        if flip:
            cand = cand.negate()
        if basis_order(cand, t) is not None:
            return cand
    raise PreconditionError(f"no random basis found in {attempts} attempts")


def _torsion_order(amb: AmbientGroup, g: GroupElement) -> int:
    c, _ = amb.split(g)
    step, j = amb.join(c, 0), 1
    while amb.scale(j, step) != amb.zero():
        j += 1
    return j


def random_split(
    t: SemigroupT,
    rng: random.Random,
    max_step: int = 5,
    max_size: int = 3,
    attempts: int = 1000,
) -> Tuple[PeriodicSet, PeriodicSet, GroupElement]:
    """
    ``(F, B, b)`` with ``B = b + ({0} ∪ E·g ∪ {jg : j >= 3})`` for a random
    ``g ∈ T`` and ``E ⊆ {1, 2}``, and ``F`` a finite subset of ``T`` off ``B``
    whose shifts ``F − b`` reach every coset of ``⟨g⟩``.
    """
    oriented = t.oriented()
    amb = t.ambient
    cols = amb.torsion_order
    direction = "line" if t.is_group else "right"
    for _ in range(attempts):
        m = rng.randint(1, max_step)
        g = amb.join(rng.randrange(cols), m)
        b = amb.join(rng.randrange(cols), rng.randint(0, max_step))
        if not oriented.carrier.member(g) or not oriented.carrier.member(b):
            continue
        order = _torsion_order(amb, g)
        extras = [j for j in (1, 2) if rng.random() < 0.5]
        inner = PeriodicSet.finite(amb, [amb.scale(j, g) for j in [0] + extras])
        inner = inner.union(
            union_all(
                amb,
                (
                    PeriodicSet.progression(amb, amb.scale(j, g), order * m, direction)
                    for j in range(3, 3 + order)
                ),
            )
        )
        b_set = inner.translate(b)
        low = -3 * m if t.is_group else 0
        points = [
            amb.join(c, n)
            for c in range(cols)
            for n in range(low, 3 * m + max_step)
            if oriented.carrier.member(amb.join(c, n)) and not b_set.member(amb.join(c, n))
        ]
        if not points:
            continue
        f = rng.sample(points, rng.randint(1, min(max_size, len(points))))
        shifts = [g] + [amb.sub(x, b) for x in f]
        if not Subgroup.generated_by(amb, shifts).is_full():
            continue
        f_set = PeriodicSet.finite(amb, f)
        if oriented is not t:
            return f_set.negate(), b_set.negate(), amb.neg(b)
        return f_set, b_set, b
    raise PreconditionError(f"no random split found in {attempts} attempts")


def random_corpus(t: SemigroupT, count: int, seed: int, **kwargs) -> List[PeriodicSet]:
    rng = random.Random(seed)
    return [random_basis(t, rng, **kwargs) for _ in range(count)]
