from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.core.abgroup import SubgroupField
from src.core.perset import ElementField, SetField


class Verdict(str, Enum):
    BASIS = "basis"
    NOT_BASIS = "not_basis"


class NotBasisReason(str, Enum):
    EMPTY = "empty"
    PROPER_SUBGROUP = "proper_subgroup"
    NO_POSITIVE_TAIL = "no_positive_tail"
    NO_NEGATIVE_TAIL = "no_negative_tail"


class BasisReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    verdict: Verdict
    order: Optional[int] = None
    reason: Optional[NotBasisReason] = None
    subgroup: Optional[SubgroupField] = None
    cap: Optional[int] = None  # certified upper bound the order search ran against
    certified: bool = False
    exceptional: Optional[SetField] = None

    @property
    def is_basis(self) -> bool:
        return self.verdict == Verdict.BASIS


class Removal(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    removed: List[ElementField]
    regular: bool
    order: Optional[int] = None
    index: Optional[str] = None


class ReservoirReport(BaseModel):
    """``K* = base + subgroup`` and the finitely many members of ``A`` outside it."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    base: ElementField
    subgroup: SubgroupField
    reservoir: List[ElementField]
    witnesses: List[Tuple[ElementField, ElementField]] = Field(default_factory=list)


class EssentialSubset(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    elements: List[ElementField]
    subgroup: SubgroupField
    index: int


class EssentialFamily(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    order: int
    reservoir: ReservoirReport
    essentials: List[EssentialSubset] = Field(default_factory=list)
    counts: Dict[int, int] = Field(default_factory=dict)
    k_max: int = 1

    def as_frozensets(self) -> frozenset:
        return frozenset(frozenset(e.elements) for e in self.essentials)


class RemovalStudy(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    order: int
    k: int
    group: bool
    removals: List[Removal] = Field(default_factory=list)
    max_orders: Dict[int, int] = Field(default_factory=dict)
    bad_singletons: int = 0
    bad_pairs: Optional[int] = None
    violations: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class TwoBasesAudit(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    h1: int
    h2: Optional[int]
    h: Optional[int]
    index: int
    ok: bool


class NNAudit(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    subgroup: SubgroupField
    index: int
    b: ElementField
    transported: SetField
    order: Optional[int]
    holds: bool


class GroupBasisReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    trivial: bool
    union: List[ElementField] = Field(default_factory=list)
    derived: Optional[SetField] = None
    order_t: int
    order_g: Optional[int] = None
    essentials_t: List[List[ElementField]] = Field(default_factory=list)
    essentials_g: List[List[ElementField]] = Field(default_factory=list)
    families_match: bool = True


class ConstructionReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    h: int
    method: str
    candidate: SetField
    order: int
    attempts: List[str] = Field(default_factory=list)


class SearchTarget(str, Enum):
    ESSENTIAL = "E"
    REMOVAL = "X"


class SearchBudget(BaseModel):
    max_period: int = Field(6, ge=0)
    max_window: int = Field(12, ge=0)
    max_size: int = Field(2, ge=1, description="Largest window part and tail part")
    samples: int = Field(2000, ge=0, description="Random candidates past the cutoff")


class Witness(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    candidate: SetField
    order: int
    value: int
    removed: List[ElementField] = Field(default_factory=list)
    essentials: List[List[ElementField]] = Field(default_factory=list)
    exceptional: Optional[SetField] = None
    removed_exceptional: Optional[SetField] = None


class SearchReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    target: SearchTarget
    h: int
    k: int
    examined: int
    bases: int
    exhaustive: bool
    best: Optional[Witness] = None
    violations: List[str] = Field(default_factory=list)
