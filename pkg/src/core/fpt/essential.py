"""
Essential subsets of the graded basis.

The top block of ``A`` is a subspace of dimension at least 3, so the
differences of ``A ∖ E`` always span it, and every other difference can be
taken against a fixed anchor ``s0`` in the top block. A candidate is the
complement ``E = t^{jr}G_r ∖ W`` of an affine hyperplane ``W`` of a lower block.
It is essential when the span of ``A ∖ E − s0`` is proper and putting back
any single member of ``E`` makes it full.

Only linear hyperplanes pass: if ``W`` misses 0 then ``0 ∈ E`` leaves ``A``,
and ``W − s0`` together with the top block spans ``t^{jr}G_r``.
"""

from __future__ import annotations

import itertools
import logging
from math import comb
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from src.core.errors import CapacityError, TruncationError, VerificationError
from src.core.fpt.graded import remark_basis
from src.core.fpt.linalg import all_vectors, encode, missing_columns, row_reduce, scalar
from src.core.fpt.schema import GradedSet, HyperplaneReport
from src.core.pipeline import parallel_map
from src.core.telemetry.metrics import MeasureLatency, MetricsCollector

logger = logging.getLogger(__name__)

MAX_BLOCK = 2**16
BRUTE_FORCE_LIMIT = 20000

Candidate = Tuple[int, Tuple[int, ...], int]


def block_vectors(basis: GradedSet, j: int) -> np.ndarray:
    """Every member of block ``j`` as a length-``D`` vector, zero included."""
    block = basis.blocks[j]
    if basis.p**block.width > MAX_BLOCK:
        raise CapacityError(f"block {j} has {basis.p}^{block.width} members")
    local = all_vectors(basis.p, block.width)
    out = np.zeros((len(local), basis.D), dtype=scalar)
    out[:, block.offset : block.offset + block.width] = local
    return out


def normalized_functionals(p: int, r: int) -> List[Tuple[int, ...]]:
    """Nonzero functionals on ``𝔽_p^r`` whose first nonzero coordinate is 1."""
    out = []
    for coeffs in itertools.product(range(p), repeat=r):
        nonzero = [c for c in coeffs if c]
        if nonzero and nonzero[0] == 1:
            out.append(coeffs)
    return out


def hyperplane_complement(basis: GradedSet, j: int, phi: Sequence[int], c: int) -> np.ndarray:
    block = basis.blocks[j]
    vectors = block_vectors(basis, j)
    local = vectors[:, block.offset : block.offset + block.width]
    values = (local @ np.array(phi, dtype=scalar)) % basis.p
    return vectors[values != c]


def _lower_members(basis: GradedSet) -> np.ndarray:
    return np.concatenate([block_vectors(basis, j) for j in range(len(basis.blocks) - 1)])


def _top_rows(basis: GradedSet) -> np.ndarray:
    top = basis.blocks[-1]
    rows = np.zeros((top.width, basis.D), dtype=scalar)
    rows[np.arange(top.width), top.offset + np.arange(top.width)] = 1
    return rows


def _anchor(basis: GradedSet) -> np.ndarray:
    s0 = np.zeros(basis.D, dtype=scalar)
    s0[basis.blocks[-1].offset] = 1
    return s0


class SpanOracle:
    """Spans of differences of ``A ∖ E`` for finite ``E`` inside the lower blocks."""

    def __init__(self, basis: GradedSet):
        self.basis = basis
        self.lower = _lower_members(basis)
        self.codes = encode(self.lower, basis.p)
        self.top = _top_rows(basis)
        self.s0 = _anchor(basis)

    def rest_rows(self, removed: np.ndarray) -> np.ndarray:
        gone = set(encode(removed, self.basis.p).tolist()) if len(removed) else set()
        keep = np.array([code not in gone for code in self.codes.tolist()], dtype=bool)
        return np.concatenate([(self.lower[keep] - self.s0) % self.basis.p, self.top])

    def missing(self, rows: np.ndarray) -> List[int]:
        missing = missing_columns(rows, self.basis.p, self.basis.D)
        if any(c >= self.basis.blocks[-1].offset for c in missing):
            raise TruncationError(
                f"difference span misses degree {max(missing)} at the truncation; raise D"
            )
        return missing

    def is_essential(self, removed: np.ndarray) -> bool:
        rows = self.rest_rows(removed)
        if not self.missing(rows):
            return False
        reduced, _ = row_reduce(rows, self.basis.p)
        for e in removed:
            back = np.concatenate([reduced, ((e - self.s0) % self.basis.p)[None, :]])
            if self.missing(back):
                return False
        return True


def _verify_candidate(task: Tuple[GradedSet, Candidate]) -> bool:
    basis, (j, phi, c) = task
    return SpanOracle(basis).is_essential(hyperplane_complement(basis, j, phi, c))


def _candidates(basis: GradedSet, r: int) -> List[Candidate]:
    functionals = normalized_functionals(basis.p, r)
    return [
        (j, phi, c)
        for j in range(len(basis.blocks) - 1)
        for phi in functionals
        for c in range(basis.p)
    ]


def _verified_per_block(basis: GradedSet, r: int, workers: Optional[int]) -> List[int]:
    candidates = _candidates(basis, r)
    verdicts = parallel_map(_verify_candidate, [(basis, cand) for cand in candidates], workers)
    per_block = [0] * (len(basis.blocks) - 1)
    for (j, _, _), ok in zip(candidates, verdicts):
        per_block[j] += int(ok)
    return per_block


def brute_force_count(basis: GradedSet, k: int) -> Optional[int]:
    """Essential ``k``-subsets of the reservoir, or ``None`` when there are too many to try."""
    oracle = SpanOracle(basis)
    reservoir = [v for v, code in zip(oracle.lower, oracle.codes.tolist()) if code]
    seen: Set[int] = set()
    unique = []
    for v, code in zip(reservoir, encode(np.array(reservoir), basis.p).tolist()):
        if code not in seen:
            seen.add(code)
            unique.append(v)
    if comb(len(unique), k) > BRUTE_FORCE_LIMIT:
        return None
    return sum(
        1 for combo in itertools.combinations(unique, k) if oracle.is_essential(np.array(combo))
    )


def essential_hyperplane_count(
    p: int, r: int, h: int, D: int, workers: Optional[int] = None
) -> HyperplaneReport:
    basis = remark_basis(p, r, h, D)
    k = p**r - p ** (r - 1)
    with MeasureLatency("fpt_essential_count"):
        per_block = _verified_per_block(basis, r, workers)
        verified = sum(per_block)
        raised = sum(_verified_per_block(remark_basis(p, r, h, D + 2), r, workers))
        brute = brute_force_count(basis, k)

    if raised != verified:
        raise TruncationError(f"verified count changes from {verified} to {raised} at D + 2")
    if brute is not None and brute != verified:
        logger.error(
            "hyperplane count disagrees with brute force",
            extra={"p": p, "r": r, "h": h, "verified": verified, "brute_force": brute},
        )
        raise VerificationError(f"{verified} hyperplane complements but {brute} essential sets")
    MetricsCollector().track_certification("fpt_essential_count", True)

    lower_bound = (h - 1) * k
    report = HyperplaneReport(
        p=p,
        r=r,
        h=h,
        D=D,
        k=k,
        candidates=len(_candidates(basis, r)),
        verified=verified,
        per_block=per_block,
        brute_force=brute,
        lower_bound=lower_bound,
        meets_lower_bound=verified >= lower_bound,
        stable=True,
    )
    logger.info(
        "essential hyperplane count",
        extra={"p": p, "r": r, "h": h, "D": D, "verified": verified, "candidates": report.candidates},
    )
    return report
