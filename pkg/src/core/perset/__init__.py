from .group import AmbientGroup, GroupElement, same_ambient
from .periodic import PeriodicSet, union_all
from .sumset import minkowski_sum, h_fold, difference_set, fold_sums
from .residue import ResidueProfile
from .literal import (
    PeriodicSetModel,
    parse_set,
    parse_element,
    format_set,
    format_element,
    to_model,
    from_model,
    SetField,
    ElementField,
)

__all__ = [
    "AmbientGroup",
    "GroupElement",
    "same_ambient",
    "PeriodicSet",
    "union_all",
    "minkowski_sum",
    "h_fold",
    "difference_set",
    "fold_sums",
    "ResidueProfile",
    "PeriodicSetModel",
    "parse_set",
    "parse_element",
    "format_set",
    "format_element",
    "to_model",
    "from_model",
    "SetField",
    "ElementField",
]
