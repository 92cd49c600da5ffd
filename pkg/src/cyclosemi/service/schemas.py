"""Pydantic wire models for the service.

Integers that can exceed 64 bits (polynomial coefficients, and for
uniformity every integer field) travel as decimal strings; booleans
and floats are native JSON.  Field declaration order is the canonical
output order.
"""
from __future__ import annotations

from pydantic import BaseModel, Field


class VersionResponse(BaseModel):
    name: str
    version: str


class AnalyzeRequest(BaseModel):
    generators: list[int] = Field(min_length=1)


class CyclotomicFactorModel(BaseModel):
    index: str
    multiplicity: str


class CyclotomicReportModel(BaseModel):
    factors: list[CyclotomicFactorModel]
    remainder: list[str]
    is_cyclotomic: bool


class AnalysisRecord(BaseModel):
    generators: list[str]
    minimal_generators: list[str]
    embedding_dimension: str
    frobenius: str
    genus: str
    gaps: list[str]
    polynomial: list[str]
    symmetric: bool


class AnalyzeResponse(BaseModel):
    analysis: AnalysisRecord
    cyclotomic_report: CyclotomicReportModel


class FamilyResponse(BaseModel):
    n: str
    t: str
    analysis: AnalysisRecord
    cyclotomic_report: CyclotomicReportModel
    closed_form_polynomial: list[str]
    closed_form_matches_derived: bool
    expected_embedding_dimension: str
    agree: bool


class ScanRowModel(BaseModel):
    n: str
    t: str
    embedding_dimension: str
    symmetric: bool
    cyclotomic: bool
    expected_dimension: str
    agree: bool


class ScanResponse(BaseModel):
    t: str
    n_min: str
    n_max: str
    rows: list[ScanRowModel]
    all_agree: bool


class RootModel(BaseModel):
    re: float
    im: float
    modulus: float


class BandModel(BaseModel):
    band_low: float
    band_high: float
    max_band_violation: float
    passed: bool


class CertificateModel(BaseModel):
    i_min: str
    i_max: str
    exclusion_ok: bool
    all_flags_hold: bool
    failed_indices: list[str]
    root_count: str
    r_bound: str
    t_bound: str


class RootCountModel(BaseModel):
    distinct_crossings: str
    suspected_double_roots: str
    total: str
    max_allowed: str


class RootsResponse(BaseModel):
    n: str
    t: str
    roots: list[RootModel] | None = None
    unit_circle_count: RootCountModel | None = None
    certificate: CertificateModel | None = None
    band: BandModel | None = None


class QSamplesResponse(BaseModel):
    n: str
    t: str
    theta: list[float]
    q: list[float]


class CensusRowModel(BaseModel):
    genus: str
    embedding_dimension: str
    total: str
    symmetric: str
    cyclotomic: str
    sym_not_cyc: str


class CensusResponse(BaseModel):
    max_genus: str
    rows: list[CensusRowModel]
    genus_totals: list[str]
    low_dimension_equivalence_ok: bool
