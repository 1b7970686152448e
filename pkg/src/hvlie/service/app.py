"""FastAPI service wrapping the exact-arithmetic engine.

Every operation is a pure request -> response computation, so the service is
stateless and safe to scale horizontally.  Domain errors map to HTTP 400,
parse errors (with their 1-based column) and malformed payloads to 422.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import metadata

from fastapi import FastAPI, HTTPException

from ..cobracket import CobracketSpec, CoboundarySpec, HVDeltaSpec, apply_cobracket
from ..core import (
    CENTERLESS,
    CENTRAL,
    DegenerateFamilyError,
    Element,
    ModeError,
    UsageError,
    WindowTooSmallError,
    bracket,
)
from ..dual import (
    EV,
    EW,
    DualBracketFamily,
    DualElement,
    DualIndex,
    dual_bracket_closed,
    dual_bracket_oracle,
    dual_cobracket_coeff,
    parse_dual_index,
)
from ..exprs import (
    ParseError,
    format_dual_element,
    format_element,
    format_rational,
    format_tensor,
    parse_element,
)
from ..recurrence import RecurrenceFunctional, recurrence_eval
from ..verify import CheckReport, format_report, run_all, run_check
from ..ybe import alternating_r, classify_cybe, cybe_defect, format_scan_row
from . import schemas

__all__ = ["create_app"]


def _version() -> str:
    try:
        return metadata.version("hvlie")
    except metadata.PackageNotFoundError:
        return "0.0.0-dev"


def _parse_element_or_422(text: str, field: str) -> Element:
    try:
        return parse_element(text)
    except ParseError as exc:
        raise HTTPException(
            status_code=422,
            detail={"message": f"{field}: {exc.message}", "kind": "parse", "column": exc.column},
        ) from exc


def _parse_rational_or_422(text: str, field: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(
            status_code=422,
            detail={"message": f"{field}: bad rational {text!r}", "kind": "parse", "column": None},
        ) from exc


def _domain_400(exc: Exception) -> HTTPException:
    kind = {
        ModeError: "mode",
        DegenerateFamilyError: "degenerate-family",
        WindowTooSmallError: "window-too-small",
    }.get(type(exc), "usage")
    return HTTPException(status_code=400, detail={"message": str(exc), "kind": kind, "column": None})


def _tensor_response(t) -> schemas.TensorResponse:
    terms = [
        schemas.TensorTerm(
            factors=[b.label() for b in key], coeff=format_rational(coeff)
        )
        for key, coeff in t.sorted_terms()
    ]
    return schemas.TensorResponse(terms=terms, text=format_tensor(t), is_zero=t.is_zero())


def _dual_terms(f: DualElement) -> list[schemas.DualTerm]:
    return [
        schemas.DualTerm(
            sector="V" if idx.sector is EV else "W",
            degree=idx.degree,
            coeff=format_rational(coeff),
        )
        for idx, coeff in f.sorted_terms()
    ]


def _report_model(report: CheckReport) -> schemas.CheckReportModel:
    return schemas.CheckReportModel(
        check_id=report.check_id,
        window=report.window,
        params=report.params,
        status=report.status,
        defect_count=report.defect_count,
        defects=[
            schemas.DefectModel(input=d.input, expected=d.expected, actual=d.actual)
            for d in report.defects
        ],
        notes=list(report.notes),
        lines=format_report(report),
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="hvlie",
        description=(
            "Exact-arithmetic service for the twisted Heisenberg-Virasoro "
            "algebra: Lie brackets, Yang-Baxter defects, cobrackets, dual "
            "Lie bialgebra brackets, and windowed verification suites."
        ),
        version=_version(),
    )

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(version=_version())

    @app.post("/bracket", response_model=schemas.ElementResponse)
    def bracket_endpoint(req: schemas.BracketRequest) -> schemas.ElementResponse:
        x = _parse_element_or_422(req.x, "x")
        y = _parse_element_or_422(req.y, "y")
        mode = CENTRAL if req.central else CENTERLESS
        try:
            result = bracket(x, y, mode)
        except UsageError as exc:
            raise _domain_400(exc) from exc
        return schemas.ElementResponse(result=format_element(result))

    @app.post("/cobracket", response_model=schemas.TensorResponse)
    def cobracket_endpoint(req: schemas.CobracketRequest) -> schemas.TensorResponse:
        x = _parse_element_or_422(req.x, "x")
        has_r = req.r_a is not None or req.r_b is not None
        has_delta = any(v is not None for v in (req.alpha, req.beta, req.gamma))
        if has_r == has_delta:
            raise HTTPException(
                status_code=422,
                detail={
                    "message": "provide either r_a and r_b, or alpha, beta, gamma",
                    "kind": "usage",
                    "column": None,
                },
            )
        spec: CobracketSpec
        if has_r:
            if req.r_a is None or req.r_b is None:
                raise HTTPException(
                    status_code=422,
                    detail={
                        "message": "coboundary cobracket needs both r_a and r_b",
                        "kind": "usage",
                        "column": None,
                    },
                )
            a = _parse_element_or_422(req.r_a, "r_a")
            b = _parse_element_or_422(req.r_b, "r_b")
            alpha = beta = gamma = None
        else:
            if None in (req.alpha, req.beta, req.gamma):
                raise HTTPException(
                    status_code=422,
                    detail={
                        "message": "delta cobracket needs alpha, beta, gamma",
                        "kind": "usage",
                        "column": None,
                    },
                )
            alpha = _parse_rational_or_422(req.alpha, "alpha")
            beta = _parse_rational_or_422(req.beta, "beta")
            gamma = _parse_rational_or_422(req.gamma, "gamma")
        try:
            if has_r:
                spec = CoboundarySpec(alternating_r(a, b))
            else:
                spec = HVDeltaSpec(alpha, beta, gamma)
            result = apply_cobracket(spec, x)
        except (UsageError, ValueError) as exc:
            raise _domain_400(exc) from exc
        return _tensor_response(result)

    @app.post("/cybe", response_model=schemas.TensorResponse)
    def cybe_endpoint(req: schemas.CybeRequest) -> schemas.TensorResponse:
        a = _parse_element_or_422(req.a, "a")
        b = _parse_element_or_422(req.b, "b")
        try:
            defect = cybe_defect(alternating_r(a, b))
        except UsageError as exc:
            raise _domain_400(exc) from exc
        return _tensor_response(defect)

    @app.post("/cybe-scan", response_model=schemas.CybeScanResponse)
    def cybe_scan_endpoint(req: schemas.CybeScanRequest) -> schemas.CybeScanResponse:
        qs = [_parse_rational_or_422(q, "q") for q in req.q]
        try:
            rows = classify_cybe((req.m_lo, req.m_hi), (req.n_lo, req.n_hi), qs)
        except ValueError as exc:
            raise _domain_400(exc) from exc
        models = [
            schemas.CybeScanRow(
                m=row.m,
                n=row.n,
                q=format_rational(row.q),
                cybe_zero=row.is_solution,
                predicted_zero=row.predicted,
                agree=row.agree,
                line=format_scan_row(row),
            )
            for row in rows
        ]
        return schemas.CybeScanResponse(rows=models, all_agree=all(r.agree for r in rows))

    @app.post("/dual-bracket", response_model=schemas.DualBracketResponse)
    def dual_bracket_endpoint(req: schemas.DualBracketRequest) -> schemas.DualBracketResponse:
        try:
            family = DualBracketFamily.from_params(req.family, req.params)
            i = parse_dual_index(req.i)
            j = parse_dual_index(req.j)
            closed = dual_bracket_closed(family, i, j)
            oracle_text = None
            agree = None
            if req.check_oracle:
                oracle = dual_bracket_oracle(
                    family, DualElement.unit(i), DualElement.unit(j), req.window
                )
                oracle_text = format_dual_element(oracle)
                agree = oracle == closed
        except KeyError as exc:
            raise HTTPException(
                status_code=422,
                detail={
                    "message": f"missing family parameter {exc.args[0]!r}",
                    "kind": "usage",
                    "column": None,
                },
            ) from exc
        except (UsageError, WindowTooSmallError, ValueError, ZeroDivisionError) as exc:
            raise _domain_400(exc) from exc
        return schemas.DualBracketResponse(
            result=format_dual_element(closed),
            terms=_dual_terms(closed),
            oracle=oracle_text,
            agree=agree,
        )

    @app.post("/dual-cobracket", response_model=schemas.DualCobracketResponse)
    def dual_cobracket_endpoint(
        req: schemas.DualCobracketRequest,
    ) -> schemas.DualCobracketResponse:
        sector = {"V": EV, "W": EW}.get(req.sector.upper())
        if sector is None:
            raise HTTPException(
                status_code=422,
                detail={"message": f"unknown sector {req.sector!r}", "kind": "usage", "column": None},
            )
        if req.window < 1:
            raise _domain_400(WindowTooSmallError("window must be >= 1"))
        entries = []
        degrees = range(-req.window, req.window + 1)
        idxs = [DualIndex(s, d) for s in (EV, EW) for d in degrees]
        for i in idxs:
            for j in idxs:
                coeff = dual_cobracket_coeff(sector, req.m, i, j)
                if coeff:
                    text = format_rational(coeff)
                    entries.append(
                        schemas.DualCobracketEntry(
                            i=i.label(),
                            j=j.label(),
                            coeff=text,
                            line=f"i={i.label()} j={j.label()} coeff={text}",
                        )
                    )
        return schemas.DualCobracketResponse(entries=entries)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify_endpoint(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        try:
            if req.suite is not None:
                params = {}
                if req.q is not None:
                    params["q"] = [_parse_rational_or_422(q, "q") for q in req.q]
                reports = [run_check(req.suite, req.window, params)]
            else:
                reports = run_all(req.window)
        except UsageError as exc:
            raise _domain_400(exc) from exc
        return schemas.VerifyResponse(
            reports=[_report_model(r) for r in reports],
            all_pass=all(r.status == "PASS" for r in reports),
        )

    @app.post("/recur", response_model=schemas.RecurResponse)
    def recur_endpoint(req: schemas.RecurRequest) -> schemas.RecurResponse:
        coeffs = [_parse_rational_or_422(c, "coeffs") for c in req.coeffs]
        seed = [_parse_rational_or_422(s, "seed") for s in req.seed]
        if req.lo > req.hi:
            raise _domain_400(UsageError("eval range is empty (lo > hi)"))
        try:
            rf = RecurrenceFunctional(coeffs, req.anchor, seed)
        except UsageError as exc:
            raise _domain_400(exc) from exc
        values = []
        for n in range(req.lo, req.hi + 1):
            value = format_rational(recurrence_eval(rf, n))
            values.append(schemas.RecurValue(n=n, value=value, line=f"n={n} f={value}"))
        return schemas.RecurResponse(values=values)

    return app


app = create_app()
