"""
Natural density relative to a translatable carrier.

A translatable carrier agrees with a half-space (or with all of ``G``) outside a
finite window, so the density of ``S`` is the share of tail classes of
``C × ℤ/p`` that ``S`` occupies in the direction of the carrier. On a group
carrier both directions are averaged. The result is a finitely additive,
translation invariant probability on ``T`` that only sees ``S ∩ T``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from src.core.perset import PeriodicSet, same_ambient
from src.core.perset import bitset
from src.core.density.schema import DensityReport
from src.core.structure import CarrierKind, SemigroupT
from src.core.telemetry.metrics import MetricsCollector


def tail_share(pattern: Sequence[int], period: int, torsion_order: int) -> Fraction:
    occupied = sum(bitset.popcount(m) for m in pattern)
    return Fraction(occupied, period * torsion_order)


def natural_density(s: PeriodicSet, t: SemigroupT) -> Fraction:
    amb = same_ambient(s.ambient, t.ambient)
    MetricsCollector().track_kernel("natural_density")
    right = tail_share(s.right, s.period, amb.torsion_order)
    left = tail_share(s.left, s.period, amb.torsion_order)
    if t.kind == CarrierKind.GROUP:
        return (right + left) / 2
    if t.kind == CarrierKind.NEGATIVE:
        return left
    return right


def density_report(s: PeriodicSet, t: SemigroupT) -> DensityReport:
    return DensityReport(set=s, carrier=t.carrier, density=natural_density(s, t))
