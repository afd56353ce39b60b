from typing import Literal, Optional

from pydantic import BaseModel, Field

Direction = Literal[
    "pt-to-perm", "perm-to-pt", "bt-to-perm", "perm-to-bt", "pt-to-bt", "bt-to-pt"
]


class PermInput(BaseModel):
    """One-line window text such as "-2,-4,5,3,1", or cycle text such as
    "(2,-3,-1,4)", together with the rank."""

    n: int = Field(..., ge=1)
    window: Optional[str] = None
    cycles: Optional[str] = None


class TableauDoc(BaseModel):
    n: int = Field(..., ge=1)
    kind: Literal["permutation", "bare"]
    positive_rows: list[int]
    ones: list[tuple[int, int]]


class MapRequest(BaseModel):
    direction: Direction
    perm: Optional[PermInput] = None
    tableau: Optional[TableauDoc] = None


class MapResponse(BaseModel):
    perm: Optional[str] = None
    tableau: Optional[TableauDoc] = None


class PermStats(BaseModel):
    window: str
    wex: int
    drop: int
    neg: int
    cyc: int
    fwex: int
    alignments_nest: list[tuple[int, int]]
    alignments_en: list[tuple[int, int]]
    alignments_ne: list[tuple[int, int]]
    crossings: list[tuple[int, int]]
    al: int
    crs: int
    inv: int


class TableauStats(BaseModel):
    one: int
    two: int
    so: int
    dess: int
    row: int
    zerorow: int
    col: int
    diag: int


class ZeroTypeCounts(BaseModel):
    zero_EE: int
    zero_NN: int
    zero_EN: int
    nontyped: int


class StatsRequest(BaseModel):
    perm: Optional[PermInput] = None
    tableau: Optional[TableauDoc] = None
    trace_from: Optional[int] = None


class StatsResponse(BaseModel):
    perm_stats: PermStats
    tableau: Optional[TableauDoc] = None
    tableau_stats: Optional[TableauStats] = None
    zero_types: Optional[ZeroTypeCounts] = None
    trace: Optional[str] = None


class VerifyRequest(BaseModel):
    theorem: str
    n: int = Field(..., ge=1)


class VerifyResponse(BaseModel):
    theorem: str
    n: int
    instances: int
    failures: list[dict]
    passed: bool
    elapsed: float


class EnumerateResponse(BaseModel):
    n: int
    kind: str
    count: int
    items: list[dict]
    truncated: bool


class HealthResponse(BaseModel):
    status: str
