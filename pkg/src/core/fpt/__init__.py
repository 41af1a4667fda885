from .schema import (
    Block,
    GradedSet,
    HyperplaneReport,
    RemarkBasisReport,
    RemovalOrderEntry,
    RemovalOrdersReport,
)
from .graded import build_remark_basis, remark_basis
from .essential import essential_hyperplane_count
from .removal import remark_removal_orders

__all__ = [
    "Block",
    "GradedSet",
    "HyperplaneReport",
    "RemarkBasisReport",
    "RemovalOrderEntry",
    "RemovalOrdersReport",
    "build_remark_basis",
    "remark_basis",
    "essential_hyperplane_count",
    "remark_removal_orders",
]
