"""
A non-translatable semigroup where every prime of a basis is essential.

In ``(ℕ*, ×)`` the set ``A = {2^k : k >= 0} ∪ {odd numbers}`` is a basis of
order 2, yet ``h(A ∖ {2})`` never reaches ``n ≡ 2 mod 4`` and ``h(A ∖ {p})``
never reaches ``2^k p`` for an odd prime ``p``.

Products are read through exponent vectors. Every element of ``A`` is a power
of two or odd, so the 2-adic valuation of an ``h``-fold product is a sum of
``h`` valuations of elements, and a product of exactly ``h`` factors exists
iff one of at most ``h`` factors does since ``1 ∈ A``.
"""

from __future__ import annotations

import logging
from typing import Callable, List, Set

from pydantic import BaseModel, Field, computed_field
from sympy import divisors, primerange

from src.core.errors import PreconditionError
from src.core.telemetry.metrics import MeasureLatency, MetricsCollector

logger = logging.getLogger(__name__)

Member = Callable[[int], bool]


class PrimeRemoval(BaseModel):
    prime: int
    targets: int
    hits: List[int] = Field(default_factory=list)


class MultiplicativeReport(BaseModel):
    limit: int
    h_max: int
    order: int
    removals: List[PrimeRemoval] = Field(default_factory=list)

    @computed_field
    @property
    def ok(self) -> bool:
        return self.order == 2 and not any(r.hits for r in self.removals)


def two_adic(n: int) -> int:
    return (n & -n).bit_length() - 1


def in_basis(n: int) -> bool:
    return n >= 1 and (n & 1 == 1 or n & (n - 1) == 0)


def without(x: int) -> Member:
    return lambda n: n != x and in_basis(n)


def valuation_sums(values: Set[int], h: int, cap: int) -> Set[int]:
    """Sums of ``h`` entries of ``values`` (``0`` included) that stay below ``cap``."""
    reached = {0}
    for _ in range(h):
        reached = {s + v for s in reached for v in values | {0} if s + v <= cap}
    return reached


def reaches(n: int, h: int, member: Member) -> bool:
    """``n`` is a product of ``h`` members, using only divisors of ``n``."""
    factors = [d for d in divisors(n) if member(d)]
    reached = {1}
    for _ in range(h):
        reached = {m * d for m in reached for d in factors if n % (m * d) == 0}
    return n in reached


def product_order(limit: int) -> int:
    """``1`` if ``A`` covers ``[1, limit]`` itself, ``2`` if products of two do."""
    if all(in_basis(n) for n in range(1, limit + 1)):
        return 1
    for n in range(1, limit + 1):
        power = 1 << two_adic(n)
        if not (in_basis(power) and in_basis(n // power)):
            raise PreconditionError(f"{n} is not a product of two members")
    return 2


def _without_two(limit: int, h_max: int) -> PrimeRemoval:
    member = without(2)
    cap = limit.bit_length()
    values = {two_adic(a) for a in range(1, limit + 1) if member(a)}
    reachable = valuation_sums(values, h_max, cap)
    targets = range(2, limit + 1, 4)
    hits = [n for n in targets if two_adic(n) in reachable]
    return PrimeRemoval(prime=2, targets=len(targets), hits=hits)


def _without_odd(p: int, limit: int, h_max: int) -> PrimeRemoval:
    member = without(p)
    targets = [p << k for k in range(limit.bit_length()) if p << k <= limit]
    hits = [n for n in targets if reaches(n, h_max, member)]
    return PrimeRemoval(prime=p, targets=len(targets), hits=hits)


def multiplicative_counterexample(
    h_max: int = 5, limit: int = 10**6, prime_limit: int = 30
) -> MultiplicativeReport:
    if h_max < 1 or limit < 6:
        raise PreconditionError(f"need h_max >= 1 and limit >= 6, got {h_max}, {limit}")
    with MeasureLatency("multiplicative_counterexample"):
        order = product_order(limit)
        removals = [_without_two(limit, h_max)]
        removals += [_without_odd(p, limit, h_max) for p in primerange(3, prime_limit + 1)]
    report = MultiplicativeReport(limit=limit, h_max=h_max, order=order, removals=removals)
    MetricsCollector().track_certification("multiplicative_counterexample", report.ok)
    if not report.ok:
        logger.error(
            "multiplicative counterexample failed",
            extra={"order": order, "hits": {r.prime: r.hits[:5] for r in removals if r.hits}},
        )
    return report
