"""FastAPI application exposing the semigroup toolkit.

Domain validation failures (bad generator sets, out-of-range family
parameters) come back as HTTP 400; the CLI maps those to usage-error
exits.
"""
from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException, Query

from .. import __version__, census, family, rootloc, semigroup
from ..polycore import CyclotomicReport, cyclotomic_test
from ..semigroup import NumericalSemigroup
from . import schemas


def _analysis_model(s: NumericalSemigroup) -> schemas.AnalysisRecord:
    return schemas.AnalysisRecord(
        generators=[str(g) for g in s.generators],
        minimal_generators=[str(g) for g in s.minimal_generators],
        embedding_dimension=str(s.embedding_dimension),
        frobenius=str(s.frobenius),
        genus=str(s.genus),
        gaps=[str(g) for g in s.gaps],
        polynomial=s.semigroup_polynomial().to_coeff_strings(),
        symmetric=s.is_symmetric(),
    )


def _cyclotomic_model(report: CyclotomicReport) -> schemas.CyclotomicReportModel:
    return schemas.CyclotomicReportModel(
        factors=[
            schemas.CyclotomicFactorModel(index=str(d), multiplicity=str(m))
            for d, m in report.factors
        ],
        remainder=report.remainder.to_coeff_strings(),
        is_cyclotomic=report.is_cyclotomic,
    )


def _scan_row(n: int, t: int) -> schemas.ScanRowModel:
    verdict = family.family_verdict(family.FamilyParams(n, t))
    expected = n - 3 * t - 1
    agree = (
        verdict.embedding_dimension == expected
        and verdict.symmetric
        and not verdict.cyclotomic
    )
    return schemas.ScanRowModel(
        n=str(n),
        t=str(t),
        embedding_dimension=str(verdict.embedding_dimension),
        symmetric=verdict.symmetric,
        cyclotomic=verdict.cyclotomic,
        expected_dimension=str(expected),
        agree=agree,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="cyclosemi", version=__version__)

    @app.get("/version", response_model=schemas.VersionResponse)
    def version() -> schemas.VersionResponse:
        return schemas.VersionResponse(name="cyclosemi", version=__version__)

    @app.post("/analyze", response_model=schemas.AnalyzeResponse)
    def analyze(request: schemas.AnalyzeRequest) -> schemas.AnalyzeResponse:
        try:
            s = semigroup.from_generators(request.generators)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        report = cyclotomic_test(s.semigroup_polynomial())
        return schemas.AnalyzeResponse(
            analysis=_analysis_model(s),
            cyclotomic_report=_cyclotomic_model(report),
        )

    @app.get("/family", response_model=schemas.FamilyResponse)
    def family_endpoint(n: int, t: int) -> schemas.FamilyResponse:
        try:
            params = family.FamilyParams(n, t)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        s = family.family_semigroup(params)
        closed = family.family_polynomial_closed_form(params)
        derived = s.semigroup_polynomial()
        report = cyclotomic_test(derived)
        expected = n - 3 * t - 1
        agree = (
            s.embedding_dimension == expected
            and s.is_symmetric()
            and not report.is_cyclotomic
        )
        return schemas.FamilyResponse(
            n=str(n),
            t=str(t),
            analysis=_analysis_model(s),
            cyclotomic_report=_cyclotomic_model(report),
            closed_form_polynomial=closed.to_coeff_strings(),
            closed_form_matches_derived=closed == derived,
            expected_embedding_dimension=str(expected),
            agree=agree,
        )

    @app.get("/scan", response_model=schemas.ScanResponse)
    def scan(t: int, n_min: int, n_max: int) -> schemas.ScanResponse:
        min_allowed = max(6 * t + 2, 3) if t == 0 else 6 * t + 2
        if t < 0 or n_min < min_allowed or n_max < n_min:
            raise HTTPException(
                status_code=400,
                detail=f"invalid range: need t >= 0, n_min >= {min_allowed}, n_max >= n_min",
            )
        rows = [_scan_row(n, t) for n in range(n_min, n_max + 1)]
        return schemas.ScanResponse(
            t=str(t),
            n_min=str(n_min),
            n_max=str(n_max),
            rows=rows,
            all_agree=all(r.agree for r in rows),
        )

    @app.get("/roots", response_model=schemas.RootsResponse)
    def roots(
        n: int,
        t: int,
        band: bool = False,
        count: bool = False,
        certificate: bool = False,
        include_roots: bool = True,
    ) -> schemas.RootsResponse:
        try:
            kernel = rootloc.QKernel(n, t)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        response = schemas.RootsResponse(n=str(n), t=str(t))
        if include_roots:
            poly = family.family_polynomial_closed_form(family.FamilyParams(n, t))
            zs = rootloc.complex_roots(poly)
            response.roots = [
                schemas.RootModel(re=z.real, im=z.imag, modulus=abs(z)) for z in zs
            ]
        if count:
            scan_result = rootloc.unit_circle_root_scan(kernel)
            response.unit_circle_count = schemas.RootCountModel(
                distinct_crossings=str(len(scan_result.crossings)),
                suspected_double_roots=str(len(scan_result.suspected_double)),
                total=str(scan_result.total),
                max_allowed=str(2 * n - 1),
            )
        if certificate:
            try:
                report = rootloc.certificate_check(kernel)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            response.certificate = schemas.CertificateModel(
                i_min=str(report.i_min),
                i_max=str(report.i_max),
                exclusion_ok=report.exclusion_ok,
                all_flags_hold=report.all_hold,
                failed_indices=[str(i) for i in report.failed_indices()],
                root_count=str(report.root_count),
                r_bound=str(report.r_bound),
                t_bound=str(report.t_bound),
            )
        if band:
            if t != 0:
                raise HTTPException(status_code=400, detail="band check is defined for t=0 only")
            try:
                report = rootloc.theorem7_band_check(n)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            response.band = schemas.BandModel(
                band_low=report.band_low,
                band_high=report.band_high,
                max_band_violation=report.max_band_violation,
                passed=report.passed,
            )
        return response

    @app.get("/qsamples", response_model=schemas.QSamplesResponse)
    def qsamples(n: int, t: int, points: int = Query(default=1024, ge=2, le=1_000_000)) -> schemas.QSamplesResponse:
        try:
            kernel = rootloc.QKernel(n, t)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        theta = [2 * math.pi * i / points for i in range(points)]
        values = rootloc.q_eval(kernel, theta)
        return schemas.QSamplesResponse(
            n=str(n), t=str(t), theta=theta, q=[float(v) for v in values]
        )

    @app.get("/census", response_model=schemas.CensusResponse)
    def census_endpoint(max_genus: int, workers: int | None = None) -> schemas.CensusResponse:
        if max_genus < 0:
            raise HTTPException(status_code=400, detail="max_genus must be nonnegative")
        table = census.enumerate_by_genus(max_genus, workers=workers)
        rows = [
            schemas.CensusRowModel(
                genus=str(row.genus),
                embedding_dimension=str(row.embedding_dimension),
                total=str(row.total),
                symmetric=str(row.symmetric),
                cyclotomic=str(row.cyclotomic),
                sym_not_cyc=str(row.symmetric_not_cyclotomic),
            )
            for row in table.sorted_rows()
        ]
        return schemas.CensusResponse(
            max_genus=str(max_genus),
            rows=rows,
            genus_totals=[str(v) for v in table.genus_totals(max_genus)],
            low_dimension_equivalence_ok=census.low_dimension_equivalence_holds(table),
        )

    return app
