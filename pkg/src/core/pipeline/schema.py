from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field


class CorpusAudit(str, Enum):
    S1 = "s1"
    S2 = "s2"
    X1 = "x1"
    X2 = "x2"
    TWOBASES = "twobases"
    NN = "nn"
    EG = "eg"
    EGT = "egt"
    ORACLE = "oracle"


class InstanceResult(BaseModel):
    candidate: str
    order: Optional[int] = None
    value: Optional[int] = None
    cap: Optional[int] = None
    ok: bool = True
    skipped: bool = False
    note: str = ""


class CorpusAuditReport(BaseModel):
    audit: CorpusAudit
    carrier: str
    seed: int
    results: List[InstanceResult] = Field(default_factory=list)

    @computed_field
    @property
    def checked(self) -> int:
        return sum(1 for r in self.results if not r.skipped)

    @property
    def violations(self) -> List[InstanceResult]:
        return [r for r in self.results if not r.ok]

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.violations

    @computed_field
    @property
    def max_value(self) -> Optional[int]:
        values = [r.value for r in self.results if r.value is not None]
        return max(values) if values else None


class AcceptanceCheck(BaseModel):
    item: int
    name: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    checks: List[AcceptanceCheck] = Field(default_factory=list)
    metrics: Dict[str, Any] = Field(default_factory=dict)

    @computed_field
    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)
