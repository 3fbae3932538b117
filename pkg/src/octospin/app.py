"""FastAPI application exposing the library over HTTP."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query

from . import service
from .families import FAMILIES, FamilyError
from .invariants import InconsistentInvariants

app = FastAPI(
    title="octospin",
    description=(
        "Octonion algebra, triality, low-dimensional spin representations, "
        "invariant polynomials, and orbit classification, verified exactly."
    ),
    version="0.1.0",
)


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/verify", response_model=service.VerifyResponse)
def verify(req: service.VerifyRequest) -> service.VerifyResponse:
    try:
        return service.do_verify(req)
    except ValueError as exc:
        raise _bad_request(exc)


@app.get("/dims", response_model=service.DimsResponse)
def dims() -> service.DimsResponse:
    return service.do_dims()


@app.get("/multable", response_model=service.MultableResponse)
def multable() -> service.MultableResponse:
    return service.do_multable()


@app.get("/basis/{family}", response_model=service.BasisResponse, response_model_exclude_none=True)
def basis(
    family: str,
    structure: bool = Query(default=False, description="include structure constants"),
) -> service.BasisResponse:
    if family not in FAMILIES:
        raise HTTPException(status_code=404, detail="unknown family %r" % family)
    return service.do_basis(family, include_structure=structure)


@app.post("/classify")
def classify(req: service.ClassifyRequest) -> dict:
    try:
        return service.do_classify(req)
    except (InconsistentInvariants, FamilyError, ValueError) as exc:
        raise _bad_request(exc)


@app.post("/stabilizer", response_model=service.StabilizerResponse)
def stabilizer(req: service.StabilizerRequest) -> service.StabilizerResponse:
    try:
        return service.do_stabilizer(req)
    except (FamilyError, ValueError) as exc:
        raise _bad_request(exc)
