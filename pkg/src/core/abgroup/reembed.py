"""
Explicit isomorphisms ``H ≅ C' ⊕ ℤ`` for finite-index subgroups.

With ``n`` moved to the first column, the Hermite form of ``H`` starts with a
row ``(g, u)``: ``g > 0`` generates the projection of ``H`` to ``ℤ`` and ``u``
is a torsion lift. The remaining rows ``B'`` span ``H ∩ C`` (as a lattice
containing ``L0``), and ``C' = span(B') / L0`` is put in invariant-factor form
by a Smith decomposition of ``K = diag(d) · B'^{-1}``.

``forward(c, n) = (((c - (n/g)u) B'^{-1}) V mod e, n/g)`` and ``backward``
inverts it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.core.abgroup.lattice import hermite_rows, smith_form, solve_triangular, vecmul
from src.core.abgroup.subgroup import Subgroup, relation_rows
from src.core.errors import PreconditionError
from src.core.perset import AmbientGroup, GroupElement, PeriodicSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Reembedding:
    subgroup: Subgroup
    target: AmbientGroup
    scale: int
    lift: Tuple[int, ...]
    torsion_basis: Tuple[Tuple[int, ...], ...]
    right: Tuple[Tuple[int, ...], ...]
    right_inverse: Tuple[Tuple[int, ...], ...]
    moduli: Tuple[int, ...]

    @property
    def source(self) -> AmbientGroup:
        return self.subgroup.ambient

    def forward(self, g: Sequence[int]) -> GroupElement:
        amb = self.source
        if not self.subgroup.member(g):
            raise PreconditionError(f"{tuple(g)} is not in {self.subgroup.describe()}")
        c, n = list(amb.normalize(g)[:-1]), int(g[-1])
        k = n // self.scale
        v = [ci - k * ui for ci, ui in zip(c, self.lift)]
        x = solve_triangular(self.torsion_basis, v) if v else []
        z = vecmul(x, self.right) if x else []
        coords = [zi % e for zi, e in zip(z, self.moduli) if e > 1]
        return tuple(coords) + (k,)

    def backward(self, g: Sequence[int]) -> GroupElement:
        amb = self.source
        *z, k = (int(x) for x in g)
        if len(z) != self.target.rank:
            raise PreconditionError(f"{tuple(g)} does not live in {self.target.describe()}")
        it = iter(z)
        full = [next(it) if e > 1 else 0 for e in self.moduli]
        x = vecmul(full, self.right_inverse) if full else []
        v = vecmul(x, self.torsion_basis) if x else [0] * amb.rank
        c = [vi + k * ui for vi, ui in zip(v, self.lift)]
        return amb.normalize(c + [k * self.scale])

    def transport(self, s: PeriodicSet) -> PeriodicSet:
        """A set contained in ``H``, rewritten over the new ambient."""
        if s.ambient != self.source:
            raise PreconditionError("set and subgroup live in different ambients")
        outside = s.difference(self.subgroup.to_periodic())
        if not outside.is_empty():
            raise PreconditionError("only sets contained in the subgroup can be transported")
        g = self.scale
        period = math.lcm(s.period // math.gcd(s.period, g), self._torsion_period())
        lo, hi = -(-s.lo // g), -(-s.hi // g)
        return PeriodicSet.from_predicate(
            self.target, period, lo, hi, lambda z: s.member(self.backward(z))
        )

    def pull_back(self, s: PeriodicSet) -> PeriodicSet:
        """Image under ``backward`` of a set over the new ambient."""
        if s.ambient != self.target:
            raise PreconditionError("set does not live in the reembedded ambient")
        g = self.scale
        period = g * math.lcm(s.period, self._torsion_period())
        return PeriodicSet.from_predicate(
            self.source,
            period,
            s.lo * g,
            s.hi * g,
            lambda x: self.subgroup.member(x) and s.member(self.forward(x)),
        )

    def _torsion_period(self) -> int:
        return self.source.factors[-1] if self.source.factors else 1


def reembed(h: Subgroup) -> Reembedding:
    if not h.has_finite_index():
        raise PreconditionError("reembedding needs a subgroup of finite index")
    amb = h.ambient
    r = amb.rank
    # n first, torsion after
    rows = [[row[-1]] + list(row[:-1]) for row in h.basis]
    hnf = hermite_rows(rows + [[0] + rel[:-1] for rel in relation_rows(amb)], r + 1)
    scale, lift = hnf[0][0], tuple(hnf[0][1:])
    torsion_basis = tuple(tuple(row[1:]) for row in hnf[1:])
    if len(torsion_basis) != r:
        raise PreconditionError("subgroup lattice lost its torsion relations")

    if r:
        relations = [
            solve_triangular(torsion_basis, [d if j == i else 0 for j in range(r)])
            for i, d in enumerate(amb.factors)
        ]
        snf = smith_form(relations)
        moduli = tuple(snf.diagonal)
        right, right_inverse = snf.right, snf.right_inverse
    else:
        moduli, right, right_inverse = (), [], []

    target = AmbientGroup(tuple(e for e in moduli if e > 1))
    logger.debug(
        "reembedded subgroup",
        extra={"subgroup": h.describe(), "target": target.describe(), "scale": scale},
    )
    return Reembedding(
        subgroup=h,
        target=target,
        scale=scale,
        lift=lift,
        torsion_basis=torsion_basis,
        right=tuple(tuple(row) for row in right),
        right_inverse=tuple(tuple(row) for row in right_inverse),
        moduli=moduli,
    )
