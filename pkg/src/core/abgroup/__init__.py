from .lattice import hermite_rows, smith_form, invariant_factors, SmithForm
from .subgroup import (
    QuotientInfo,
    Subgroup,
    SubgroupModel,
    subgroup_from_periodic,
    difference_subgroup,
    subgroup_model,
    SubgroupField,
)
from .reembed import Reembedding, reembed

__all__ = [
    "hermite_rows",
    "smith_form",
    "invariant_factors",
    "SmithForm",
    "QuotientInfo",
    "Subgroup",
    "SubgroupModel",
    "subgroup_from_periodic",
    "difference_subgroup",
    "subgroup_model",
    "SubgroupField",
    "Reembedding",
    "reembed",
]
