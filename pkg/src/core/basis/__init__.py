from .schema import (
    BasisReport,
    ConstructionReport,
    EssentialFamily,
    EssentialSubset,
    GroupBasisReport,
    NNAudit,
    NotBasisReason,
    Removal,
    RemovalStudy,
    ReservoirReport,
    SearchBudget,
    SearchReport,
    SearchTarget,
    TwoBasesAudit,
    Verdict,
    Witness,
)
from .order import ord_star, basis_order
from .criterion import erdos_graham, removal_order
from .essential import reservoir, essential_subsets
from .removal import bound_audit
from .twobases import twobases_audit, lemma_nn_audit
from .correspondence import derive_group_basis
from .construct import construct_exact_order_basis
from .search import witness_search
from .corpus import random_basis, random_corpus, standard_carrier, STANDARD_CARRIERS

__all__ = [
    "BasisReport",
    "ConstructionReport",
    "EssentialFamily",
    "EssentialSubset",
    "GroupBasisReport",
    "NNAudit",
    "NotBasisReason",
    "Removal",
    "RemovalStudy",
    "ReservoirReport",
    "SearchBudget",
    "SearchReport",
    "SearchTarget",
    "TwoBasesAudit",
    "Verdict",
    "Witness",
    "ord_star",
    "basis_order",
    "erdos_graham",
    "removal_order",
    "reservoir",
    "essential_subsets",
    "bound_audit",
    "twobases_audit",
    "lemma_nn_audit",
    "derive_group_basis",
    "construct_exact_order_basis",
    "witness_search",
    "random_basis",
    "random_corpus",
    "standard_carrier",
    "STANDARD_CARRIERS",
]
