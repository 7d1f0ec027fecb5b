"""HTTP service exposing the identity registry and verification drivers.

The CLI talks to this app (in-process by default); numbers are emitted as
decimal strings carrying full working precision plus an ``approx`` double so
records stay lossless above 53-bit precision.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from fastapi import FastAPI, HTTPException
from mpmath import mp, mpmathify, nstr
from pydantic import BaseModel, Field

from . import catalog
from .errors import (
    ConvergenceError,
    DomainError,
    HarmonicSumsError,
    KindError,
    NotFound,
    PoleError,
)
from .precision import PrecisionContext, to_mp, working_precision

__all__ = ["app", "parse_param_value", "encode_number", "decode_number", "report_to_json"]


# ---------------------------------------------------------------------------
# parameter and number codecs
# ---------------------------------------------------------------------------

_INT_RE = re.compile(r"^[+-]?\d+$")
_FRAC_RE = re.compile(r"^([+-]?\d+)/(\d+)$")
_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)[ij]$"
)
_PURE_IM_RE = re.compile(r"^(?P<im>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)[ij]$")


def parse_param_value(raw):
    """Parse a parameter string: integer, rational "p/q", complex "a+bi", float."""
    if not isinstance(raw, str):
        return raw
    s = raw.strip().replace(" ", "")
    if _INT_RE.match(s):
        return int(s)
    m = _FRAC_RE.match(s)
    if m:
        return Fraction(int(m.group(1)), int(m.group(2)))
    m = _COMPLEX_RE.match(s)
    if m:
        return complex(float(m.group("re")), float(m.group("im")))
    m = _PURE_IM_RE.match(s)
    if m:
        return complex(0.0, float(m.group("im")))
    try:
        return float(s)
    except ValueError:
        raise DomainError(f"cannot parse parameter value {raw!r}")


def _parse_params(params: Optional[dict]) -> dict:
    return {k: parse_param_value(v) for k, v in (params or {}).items()}


def encode_number(value, ctx: PrecisionContext) -> Optional[dict]:
    """Lossless decimal-string encoding plus an approximate double."""
    if value is None:
        return None
    dps = int(ctx.mantissa_bits * 0.30103) + 3
    with working_precision(ctx.mantissa_bits):
        v = to_mp(value)
        if mp.im(v) == 0:
            v = mp.re(v)
            return {"decimal": nstr(v, dps), "approx": float(v)}
        return {
            "decimal": {"re": nstr(mp.re(v), dps), "im": nstr(mp.im(v), dps)},
            "approx": {"re": float(mp.re(v)), "im": float(mp.im(v))},
        }


def decode_number(doc):
    """Inverse of encode_number (to mpf/mpc at current precision)."""
    if doc is None:
        return None
    dec = doc["decimal"]
    if isinstance(dec, dict):
        return mp.mpc(mpmathify(dec["re"]), mpmathify(dec["im"]))
    return mpmathify(dec)


def report_to_json(report: catalog.VerificationReport, ctx: PrecisionContext) -> dict:
    record = catalog.lookup(report.id)
    return {
        "id": report.id,
        "provenance": record.provenance,
        "params": {k: catalog.format_param(v) for k, v in report.parameters.items()},
        "lhs": encode_number(report.lhs_value, ctx),
        "rhs": encode_number(report.rhs_value, ctx),
        "abs_error": report.abs_error,
        "rel_error": report.rel_error,
        "terms_used": report.terms_used,
        "accelerated": report.accelerated,
        "passed": report.passed,
        "wall_time_ms": report.wall_time * 1000.0,
        "error": report.error,
    }


# ---------------------------------------------------------------------------
# request/response models
# ---------------------------------------------------------------------------


class ContextModel(BaseModel):
    mantissa_bits: int = Field(default=128, ge=53)
    tol: float = Field(default=1e-10, gt=0)
    max_terms: int = Field(default=2_000_000, ge=1)

    def build(self) -> PrecisionContext:
        return PrecisionContext(
            mantissa_bits=self.mantissa_bits,
            max_terms=self.max_terms,
            target_tol=self.tol,
        )


class VerifyRequest(ContextModel):
    id: str
    params: dict[str, str] = Field(default_factory=dict)


class VerifyExactRequest(BaseModel):
    id: str
    params: dict[str, str] = Field(default_factory=dict)


class SweepRequest(ContextModel):
    id: str
    grid: list[dict[str, str]] = Field(default_factory=list)


class ReportRequest(ContextModel):
    ids: Optional[list[str]] = None


class NumberModel(BaseModel):
    decimal: object
    approx: object


class ReportModel(BaseModel):
    id: str
    provenance: str
    params: dict[str, str]
    lhs: Optional[NumberModel]
    rhs: Optional[NumberModel]
    abs_error: float
    rel_error: float
    terms_used: int
    accelerated: bool
    passed: bool
    wall_time_ms: float
    error: Optional[str] = None


class ReportSetModel(BaseModel):
    reports: list[ReportModel]
    all_passed: bool


class ExactResultModel(BaseModel):
    id: str
    params: dict[str, str]
    passed: bool
    lhs_coefficients: dict[str, str]
    rhs_coefficients: dict[str, str]


class IdentityModel(BaseModel):
    id: str
    kind: str
    description: str
    provenance: str
    parameters: list[str]
    domain: str
    canonical: list[dict[str, str]]


# ---------------------------------------------------------------------------
# application
# ---------------------------------------------------------------------------

app = FastAPI(title="harmonicsums", version=catalog.REGISTRY_VERSION)


def _http_error(exc: Exception) -> HTTPException:
    if isinstance(exc, NotFound):
        return HTTPException(status_code=404, detail=str(exc))
    if isinstance(exc, (DomainError, KindError, PoleError, ValueError)):
        return HTTPException(status_code=422, detail=f"{type(exc).__name__}: {exc}")
    if isinstance(exc, ConvergenceError):
        return HTTPException(status_code=500, detail=f"ConvergenceError: {exc}")
    if isinstance(exc, HarmonicSumsError):
        return HTTPException(status_code=500, detail=f"{type(exc).__name__}: {exc}")
    raise exc


def _identity_model(record: catalog.IdentityRecord) -> IdentityModel:
    return IdentityModel(
        id=record.id,
        kind=record.kind,
        description=record.description,
        provenance=record.provenance,
        parameters=list(record.param_names),
        domain=record.domain,
        canonical=[
            {k: catalog.format_param(v) for k, v in p.items()} for p in record.canonical
        ],
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "registry_version": catalog.REGISTRY_VERSION}


@app.get("/identities", response_model=list[IdentityModel])
def identities():
    return [_identity_model(r) for r in catalog.list_identities()]


@app.get("/identities/{identity_id:path}", response_model=IdentityModel)
def identity(identity_id: str):
    try:
        return _identity_model(catalog.lookup(identity_id))
    except HarmonicSumsError as exc:
        raise _http_error(exc)


@app.get("/registry")
def registry() -> dict:
    return catalog.registry_document()


@app.post("/verify", response_model=ReportModel)
def verify(req: VerifyRequest):
    try:
        ctx = req.build()
        report = catalog.verify(req.id, _parse_params(req.params), ctx)
        return report_to_json(report, ctx)
    except (HarmonicSumsError, ValueError) as exc:
        raise _http_error(exc)


@app.post("/verify-exact", response_model=ExactResultModel)
def verify_exact(req: VerifyExactRequest):
    try:
        params = _parse_params(req.params)
        passed, lhs, rhs = catalog.verify_exact(req.id, params)
        return ExactResultModel(
            id=req.id,
            params={k: catalog.format_param(v) for k, v in params.items()},
            passed=passed,
            lhs_coefficients={k: str(v) for k, v in sorted(lhs.items())},
            rhs_coefficients={k: str(v) for k, v in sorted(rhs.items())},
        )
    except (HarmonicSumsError, ValueError) as exc:
        raise _http_error(exc)


@app.post("/sweep", response_model=ReportSetModel)
def sweep(req: SweepRequest):
    try:
        ctx = req.build()
        catalog.lookup(req.id)
        grid = [_parse_params(point) for point in req.grid]
        reports = catalog.sweep(req.id, grid, ctx)
        docs = [report_to_json(r, ctx) for r in reports]
        return ReportSetModel(reports=docs, all_passed=all(r.passed for r in reports))
    except (HarmonicSumsError, ValueError) as exc:
        raise _http_error(exc)


@app.post("/report", response_model=ReportSetModel)
def report(req: ReportRequest):
    try:
        ctx = req.build()
        if req.ids:
            for identity_id in req.ids:
                catalog.lookup(identity_id)
        reports = catalog.run_report(ctx, ids=req.ids)
        docs = [report_to_json(r, ctx) for r in reports]
        return ReportSetModel(reports=docs, all_passed=all(r.passed for r in reports))
    except (HarmonicSumsError, ValueError) as exc:
        raise _http_error(exc)
