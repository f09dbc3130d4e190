"""FastAPI service exposing the invariant computations.

Run with ``platjones serve`` or ``uvicorn platjones.api:app``.  Input
errors map to 400, resource caps to 413; response bodies are the pydantic
models from ``platjones.service``.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from . import service
from .errors import InputError, PlatJonesError, ResourceError

app = FastAPI(
    title="platjones",
    description="Colored Jones polynomials of plat-closed braids via the "
                "SU(2)_q conformal-block representation",
    version="0.1.0",
)


@app.exception_handler(InputError)
async def _input_error(_req: Request, exc: InputError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": type(exc).__name__, "detail": str(exc)})


@app.exception_handler(ResourceError)
async def _resource_error(_req: Request, exc: ResourceError) -> JSONResponse:
    return JSONResponse(status_code=413, content={"error": type(exc).__name__, "detail": str(exc)})


@app.exception_handler(PlatJonesError)
async def _other_error(_req: Request, exc: PlatJonesError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"error": type(exc).__name__, "detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/compute", response_model=service.ComputeResponse)
def compute(req: service.ComputeRequest) -> service.ComputeResponse:
    return service.compute(req)


@app.post("/sample", response_model=service.SampleResponse)
def sample(req: service.SampleRequest) -> service.SampleResponse:
    return service.sample(req)


@app.post("/rt", response_model=service.RTResponse)
def rt(req: service.RTRequest) -> service.RTResponse:
    return service.rt(req)


@app.post("/volscan", response_model=service.VolScanResponse)
def volscan(req: service.VolScanRequest) -> service.VolScanResponse:
    return service.volscan(req)


@app.post("/volscan.csv", response_class=PlainTextResponse)
def volscan_csv(req: service.VolScanRequest) -> str:
    return service.volscan_csv(service.volscan(req))


@app.post("/basis", response_model=service.BasisResponse)
def basis(req: service.BasisRequest) -> service.BasisResponse:
    return service.basis(req)


@app.get("/verify", response_model=service.VerifyResponse)
def verify(tolerance: float = 1e-9) -> service.VerifyResponse:
    return service.verify(tolerance=tolerance)
