from enum import Enum
from fractions import Fraction
from typing import Annotated, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

from src.core.perset import SetField

FractionField = Annotated[Fraction, PlainSerializer(str, return_type=str)]


class DensityReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    set: SetField
    carrier: SetField
    density: FractionField


class DensityLemma(str, Enum):
    PREHISTORIC = "prehistoric"
    DOUBLING = "doubling"
    ITERATED = "iterated_doubling"
    STABILIZATION = "stabilization"
    TRANSLATE_COVER = "translate_cover"
    LOW_DENSITY = "low_density"


class LemmaCheck(BaseModel):
    """One instance: whether the hypotheses held and, if evaluated, the conclusion."""

    model_config = ConfigDict(frozen=True)

    lemma: DensityLemma
    hypotheses_hold: bool
    conclusion_holds: Optional[bool] = None
    detail: Dict[str, str] = Field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.hypotheses_hold and self.conclusion_holds is False


class LemmaSummary(BaseModel):
    lemma: DensityLemma
    instances: int = 0
    hypotheses_held: int = 0
    violations: List[str] = Field(default_factory=list)


class DensitySuiteReport(BaseModel):
    carrier: str
    seed: int
    summaries: List[LemmaSummary] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(not s.violations for s in self.summaries)
