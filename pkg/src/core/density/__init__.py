from .schema import (
    DensityLemma,
    DensityReport,
    DensitySuiteReport,
    LemmaCheck,
    LemmaSummary,
)
from .natural import natural_density, density_report
from .audits import (
    prehistoric_audit,
    doubling_audit,
    iterated_audit,
    stabilization_audit,
    translate_cover_audit,
    low_density_audit,
)
from .suite import density_lemma_suite, random_periodic_set

__all__ = [
    "DensityLemma",
    "DensityReport",
    "DensitySuiteReport",
    "LemmaCheck",
    "LemmaSummary",
    "natural_density",
    "density_report",
    "prehistoric_audit",
    "doubling_audit",
    "iterated_audit",
    "stabilization_audit",
    "translate_cover_audit",
    "low_density_audit",
    "density_lemma_suite",
    "random_periodic_set",
]
