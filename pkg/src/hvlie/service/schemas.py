"""Request/response models for the HTTP API.

Exact values cross the wire as canonical text: elements in the expression
grammar ("3/2*L(2) - I(-1)"), rationals as "p/q", dual indices as "V,3" /
"W,-2".  Tensors and dual elements are returned both as structured term lists
and as canonical text.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str


class BracketRequest(BaseModel):
    x: str
    y: str
    central: bool = False


class ElementResponse(BaseModel):
    result: str


class TensorTerm(BaseModel):
    factors: list[str]
    coeff: str


class TensorResponse(BaseModel):
    terms: list[TensorTerm]
    text: str
    is_zero: bool


class CobracketRequest(BaseModel):
    x: str
    r_a: str | None = None
    r_b: str | None = None
    alpha: str | None = None
    beta: str | None = None
    gamma: str | None = None


class CybeRequest(BaseModel):
    a: str
    b: str


class CybeScanRequest(BaseModel):
    m_lo: int
    m_hi: int
    n_lo: int
    n_hi: int
    q: list[str]


class CybeScanRow(BaseModel):
    m: int
    n: int
    q: str
    cybe_zero: bool
    predicted_zero: bool
    agree: bool
    line: str


class CybeScanResponse(BaseModel):
    rows: list[CybeScanRow]
    all_agree: bool


class DualBracketRequest(BaseModel):
    family: str
    params: dict[str, str] = Field(default_factory=dict)
    i: str
    j: str
    check_oracle: bool = False
    window: int = 14


class DualTerm(BaseModel):
    sector: str
    degree: int
    coeff: str


class DualBracketResponse(BaseModel):
    result: str
    terms: list[DualTerm]
    oracle: str | None = None
    agree: bool | None = None


class DualCobracketRequest(BaseModel):
    sector: str
    m: int
    window: int = 8


class DualCobracketEntry(BaseModel):
    i: str
    j: str
    coeff: str
    line: str


class DualCobracketResponse(BaseModel):
    entries: list[DualCobracketEntry]


class VerifyRequest(BaseModel):
    suite: str | None = None
    window: int = 4
    q: list[str] | None = None


class DefectModel(BaseModel):
    input: str
    expected: str
    actual: str


class CheckReportModel(BaseModel):
    check_id: str
    window: int
    params: str
    status: str
    defect_count: int
    defects: list[DefectModel]
    notes: list[str]
    lines: list[str]


class VerifyResponse(BaseModel):
    reports: list[CheckReportModel]
    all_pass: bool


class RecurRequest(BaseModel):
    coeffs: list[str]
    anchor: int
    seed: list[str]
    lo: int
    hi: int


class RecurValue(BaseModel):
    n: int
    value: str
    line: str


class RecurResponse(BaseModel):
    values: list[RecurValue]


class ErrorDetail(BaseModel):
    message: str
    kind: str
    column: int | None = None
