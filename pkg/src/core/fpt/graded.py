"""
The graded basis of ``𝔽_p[t]``

    A = G_r ∪ t^r G_r ∪ … ∪ t^{r(h-2)} G_r ∪ t^{r(h-1)} G

with ``G_r`` the polynomials of degree below ``r``. Cutting ``f`` into its
coefficients on ``[jr, (j+1)r)`` for ``j <= h-2`` and the remaining high part
writes ``f`` as a sum of ``h`` members. Members are supported inside one block
and the blocks are disjoint, so a polynomial with a nonzero coefficient in
every block needs ``h`` summands.

Polynomials are coefficient vectors of length ``D``; the top block is cut at
degree ``D``.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np
from sympy import isprime

from src.core.config import settings
from src.core.errors import PreconditionError, VerificationError
from src.core.fpt.linalg import all_vectors, scalar
from src.core.fpt.schema import Block, GradedSet, RemarkBasisReport
from src.core.telemetry.metrics import MetricsCollector

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE = 2**20
CHUNK = 2**14


def check_parameters(p: int, r: int, h: int, D: int) -> None:
    if not isprime(p):
        raise PreconditionError(f"p = {p} is not prime")
    if r < 1 or h < 2:
        raise PreconditionError(f"need r >= 1 and h >= 2, got r={r}, h={h}")
    if D < r * h + 2:
        raise PreconditionError(f"truncation degree D = {D} is below r*h + 2 = {r * h + 2}")


def remark_basis(p: int, r: int, h: int, D: int) -> GradedSet:
    check_parameters(p, r, h, D)
    top = (h - 1) * r
    blocks = [Block(offset=j * r, width=r) for j in range(h - 1)]
    blocks.append(Block(offset=top, width=D - top))
    return GradedSet(p=p, D=D, blocks=blocks)


def block_masks(basis: GradedSet) -> np.ndarray:
    masks = np.zeros((len(basis.blocks), basis.D), dtype=bool)
    for j, block in enumerate(basis.blocks):
        masks[j, block.offset : block.offset + block.width] = True
    return masks


def members_mask(basis: GradedSet, vectors: np.ndarray) -> np.ndarray:
    """Row-wise membership: zero, or support inside a single block."""
    nonzero = vectors % basis.p != 0
    empty = ~nonzero.any(axis=1)
    lo = np.argmax(nonzero, axis=1)
    hi = basis.D - 1 - np.argmax(nonzero[:, ::-1], axis=1)
    inside = np.zeros(len(vectors), dtype=bool)
    for block in basis.blocks:
        inside |= (lo >= block.offset) & (hi < block.offset + block.width)
    return empty | inside


def witness(basis: GradedSet) -> np.ndarray:
    """One unit coefficient at the start of every block."""
    w = np.zeros(basis.D, dtype=scalar)
    for block in basis.blocks:
        w[block.offset] = 1
    return w


def blocks_met(basis: GradedSet, v: np.ndarray) -> int:
    masks = block_masks(basis)
    support = v % basis.p != 0
    return int(sum(bool((support & m).any()) for m in masks))


def _check_decomposition(basis: GradedSet, masks: np.ndarray, vectors: np.ndarray) -> None:
    pieces = vectors[None, :, :] * masks[:, None, :]
    for j in range(len(basis.blocks)):
        if not members_mask(basis, pieces[j]).all():
            raise VerificationError(f"a piece cut along block {j} is not a member of A")
    if not (pieces.sum(axis=0) % basis.p == vectors % basis.p).all():
        raise VerificationError("block pieces do not add back up to the vector")


def build_remark_basis(
    p: int,
    r: int,
    h: int,
    D: int,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> RemarkBasisReport:
    basis = remark_basis(p, r, h, D)
    samples = settings.ADDBASIS_FPT_SAMPLES if samples is None else samples
    seed = settings.ADDBASIS_SEED if seed is None else seed
    masks = block_masks(basis)
    if not (masks.sum(axis=0) == 1).all():
        raise VerificationError("blocks do not partition the degrees below D")

    rng = np.random.default_rng(seed)
    _check_decomposition(basis, masks, rng.integers(0, p, size=(samples, D), dtype=scalar))
    checked = samples
    exhaustive = p**D <= MAX_EXHAUSTIVE
    if exhaustive:
        for start in range(0, p**D, CHUNK):
            chunk = all_vectors(p, D, start, min(start + CHUNK, p**D))
            _check_decomposition(basis, masks, chunk)
            checked += len(chunk)

    w = witness(basis)
    if blocks_met(basis, w) != h:
        raise VerificationError("the all-blocks witness does not meet every block")
    MetricsCollector().track_certification("fpt_remark_basis", True)
    logger.debug(
        "remark basis verified",
        extra={"p": p, "r": r, "h": h, "D": D, "checked": checked},
    )
    return RemarkBasisReport(
        p=p,
        r=r,
        h=h,
        D=D,
        basis=basis,
        order=h,
        checked=checked,
        exhaustive=exhaustive,
        witness=[int(x) for x in w],
    )
