"""HTTP service exposing the library over JSON.

Run with: uvicorn adams_spectra.service.app:app

Anticipated failures (non-realizable profiles, out-of-range degrees,
cache misses, violated asymptotic hypotheses, ...) return HTTP 400 with
the error name, message, and offending input; malformed requests get
FastAPI's standard 422 validation response.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import DomainError
from . import handlers as H
from . import schemas as S

app = FastAPI(
    title="adams-spectra",
    version=__version__,
    description="Spectra, traces, and characteristic polynomials of "
                "convolution powers on graded connected Hopf algebras, "
                "from dimension data alone.",
)


@app.exception_handler(DomainError)
async def domain_error_handler(request: Request, exc: DomainError):
    body = {"schema": S.SCHEMA_VERSION}
    body.update(exc.payload())
    return JSONResponse(status_code=400, content=body)


@app.get("/health", response_model=S.HealthResponse)
def health() -> S.HealthResponse:
    return H.handle_health()


@app.post("/v1/euler", response_model=S.EulerResponse,
          response_model_exclude_none=True)
def euler(req: S.EulerRequest) -> S.EulerResponse:
    return H.handle_euler(req)


@app.post("/v1/charpoly", response_model=S.CharpolyResponse,
          response_model_exclude_none=True)
def charpoly(req: S.CharpolyRequest) -> S.CharpolyResponse:
    return H.handle_charpoly(req)


@app.post("/v1/trace", response_model=S.TraceResponse,
          response_model_exclude_none=True)
def trace(req: S.TraceRequest) -> S.TraceResponse:
    return H.handle_trace(req)


@app.post("/v1/tracegf", response_model=S.TraceGfResponse,
          response_model_exclude_none=True)
def tracegf(req: S.TraceGfRequest) -> S.TraceGfResponse:
    return H.handle_tracegf(req)


@app.post("/v1/palindromes", response_model=S.PalindromesResponse,
          response_model_exclude_none=True)
def palindromes(req: S.PalindromesRequest) -> S.PalindromesResponse:
    return H.handle_palindromes(req)


@app.post("/v1/qtrace", response_model=S.QTraceResponse,
          response_model_exclude_none=True)
def qtrace(req: S.QTraceRequest) -> S.QTraceResponse:
    return H.handle_qtrace(req)


@app.post("/v1/witt", response_model=S.WittResponse,
          response_model_exclude_none=True)
def witt(req: S.WittRequest) -> S.WittResponse:
    return H.handle_witt(req)


@app.post("/v1/species", response_model=S.SpeciesResponse,
          response_model_exclude_none=True)
def species(req: S.SpeciesRequest) -> S.SpeciesResponse:
    return H.handle_species(req)


@app.post("/v1/asym", response_model=S.AsymResponse,
          response_model_exclude_none=True)
def asym(req: S.AsymRequest) -> S.AsymResponse:
    return H.handle_asym(req)


@app.post("/v1/verify", response_model=S.VerifyResponse,
          response_model_exclude_none=True)
def verify(req: S.VerifyRequest) -> S.VerifyResponse:
    return H.handle_verify(req)


@app.post("/v1/oeis", response_model=S.OeisResponse,
          response_model_exclude_none=True)
def oeis(req: S.OeisRequest) -> S.OeisResponse:
    return H.handle_oeis(req)
