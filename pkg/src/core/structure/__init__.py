from .semigroup import CarrierKind, SemigroupT, validate_semigroup
from .decompose import (
    StructureReport,
    structure_decompose,
    grothendieck,
    t_cap_H,
    multiples,
    half_space,
    torsion_subgroup,
)
from .multiplicative import MultiplicativeReport, multiplicative_counterexample

__all__ = [
    "CarrierKind",
    "SemigroupT",
    "validate_semigroup",
    "StructureReport",
    "structure_decompose",
    "grothendieck",
    "t_cap_H",
    "multiples",
    "half_space",
    "torsion_subgroup",
    "MultiplicativeReport",
    "multiplicative_counterexample",
]
