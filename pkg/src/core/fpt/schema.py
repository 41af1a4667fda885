from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Block(BaseModel):
    """``t^offset · G_width``: polynomials supported on ``[offset, offset + width)``."""

    model_config = ConfigDict(frozen=True)

    offset: int
    width: int

    def covers(self, lo: int, hi: int) -> bool:
        return self.offset <= lo and hi < self.offset + self.width


class GradedSet(BaseModel):
    """A union of blocks of ``𝔽_p[t]`` truncated below degree ``D``."""

    model_config = ConfigDict(frozen=True)

    p: int
    D: int
    blocks: List[Block]
    exceptional: List[Tuple[int, ...]] = Field(default_factory=list)

    def block_of(self, v: Sequence[int]) -> Optional[int]:
        support = [i for i, x in enumerate(v) if x % self.p]
        if not support:
            return None
        for j, block in enumerate(self.blocks):
            if block.covers(support[0], support[-1]):
                return j
        return None

    def member(self, v: Sequence[int]) -> bool:
        if len(v) != self.D:
            return False
        if not any(x % self.p for x in v):
            return True
        if tuple(x % self.p for x in v) in self.exceptional:
            return True
        return self.block_of(v) is not None


class RemarkBasisReport(BaseModel):
    p: int
    r: int
    h: int
    D: int
    basis: GradedSet
    order: int
    checked: int
    exhaustive: bool
    witness: List[int]


class HyperplaneReport(BaseModel):
    p: int
    r: int
    h: int
    D: int
    k: int
    candidates: int
    verified: int
    per_block: List[int] = Field(default_factory=list)
    brute_force: Optional[int] = None
    lower_bound: int
    meets_lower_bound: bool
    stable: bool


class RemovalOrderEntry(BaseModel):
    block: int
    element: List[int]
    regular: bool
    order: Optional[int] = None


class RemovalOrdersReport(BaseModel):
    p: int
    r: int
    h: int
    D: int
    entries: List[RemovalOrderEntry] = Field(default_factory=list)
    max_order: Optional[int] = None
    caps: Dict[str, int] = Field(default_factory=dict)
    ok: bool = True
