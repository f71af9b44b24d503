"""FastAPI service wrapping the core package.

Every endpoint is a thin adapter over the same library calls the CLI makes:
coefficient tables, kernel and multiplier evaluation, verification suites,
and grid transforms (grids travel inline as row-major re/im pairs).
Compute-level domain errors surface as HTTP 400; schema violations are
rejected by pydantic with 422.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException

from . import __version__
from .kernel import CPoint, reproducing_kernel
from .schemas import (
    CoeffsRequest,
    CoeffsResponse,
    ComplexValue,
    GridPayload,
    HealthResponse,
    KernelRequest,
    KernelResponse,
    SymbolRequest,
    SymbolResponse,
    TransformRequest,
    TransformResponse,
    VerifyRequest,
    VerifyResponse,
)
from .suites import run_suite
from .symbols import SpaceParams, SymbolRep, coeff_table, convention_report, hhat
from .transform import (
    DIRECT_MARGIN,
    BoundaryMarginError,
    GridFunction2D,
    berezin_direct,
    berezin_spectral,
)

app = FastAPI(
    title="berezin",
    version=__version__,
    description="Landau-level transforms: exact coefficient tables, kernel and "
    "multiplier evaluation, verification suites, grid transforms.",
)


def _grid_from_payload(payload: GridPayload) -> GridFunction2D:
    values = np.array([complex(re, im) for re, im in payload.values], dtype=complex)
    return GridFunction2D(
        payload.nx,
        payload.ny,
        payload.xmin,
        payload.xmax,
        payload.ymin,
        payload.ymax,
        values,
    )


def _payload_from_grid(grid: GridFunction2D) -> GridPayload:
    flat = grid.values.reshape(-1)
    return GridPayload(
        nx=grid.nx,
        ny=grid.ny,
        xmin=grid.xmin,
        xmax=grid.xmax,
        ymin=grid.ymin,
        ymax=grid.ymax,
        values=[(float(v.real), float(v.imag)) for v in flat],
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/coeffs", response_model=CoeffsResponse)
def coeffs(req: CoeffsRequest) -> CoeffsResponse:
    params = SpaceParams(req.n, req.m)
    table = coeff_table(params)
    report = convention_report(params)
    return CoeffsResponse(
        params=req,
        families={
            "gamma": [str(v) for v in table.gamma],
            "sigma": [str(v) for v in table.sigma],
            "c": [str(v) for v in table.c],
            "kappa": [str(v) for v in table.kappa],
        },
        report=report.to_json_obj(),
    )


@app.post("/kernel", response_model=KernelResponse)
def kernel_value(req: KernelRequest) -> KernelResponse:
    params = SpaceParams(req.n, req.m)
    value = reproducing_kernel(params, CPoint.from_reals(req.z), CPoint.from_reals(req.w))
    return KernelResponse(value=ComplexValue(re=value.real, im=value.imag))


@app.post("/symbol", response_model=SymbolResponse)
def symbol_value(req: SymbolRequest) -> SymbolResponse:
    params = SpaceParams(req.n, req.m)
    return SymbolResponse(value=hhat(params, req.xi_norm**2))


@app.post("/verify", response_model=VerifyResponse, response_model_by_alias=True)
def verify(req: VerifyRequest) -> VerifyResponse:
    try:
        report = run_suite(req.suite, n=req.n, m=req.m, tol=req.tol)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return VerifyResponse.model_validate(report)


@app.post("/transform", response_model=TransformResponse)
def transform_grid(req: TransformRequest) -> TransformResponse:
    grid = _grid_from_payload(req.grid)
    rep = SymbolRep(req.rep)
    if req.method == "spectral":
        out = berezin_spectral(grid, req.m, rep=rep)
        return TransformResponse(grid=_payload_from_grid(out), metadata=out.metadata)
    # direct: evaluate on the interior sub-grid a margin away from the boundary
    xs, ys = grid.x, grid.y
    ki = np.where((xs - grid.xmin >= DIRECT_MARGIN) & (grid.xmax - xs >= DIRECT_MARGIN))[0]
    kj = np.where((ys - grid.ymin >= DIRECT_MARGIN) & (grid.ymax - ys >= DIRECT_MARGIN))[0]
    if len(ki) < 8 or len(kj) < 8:
        raise HTTPException(
            status_code=400,
            detail=f"direct method needs an interior sub-grid of at least 8x8 nodes a "
            f"margin of {DIRECT_MARGIN} from the boundary; this grid leaves "
            f"{len(ki)}x{len(kj)}",
        )
    pts = [complex(xs[i], ys[j]) for i in ki for j in kj]
    try:
        vals = berezin_direct(grid, req.m, pts)
    except BoundaryMarginError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    out = GridFunction2D(
        len(ki),
        len(kj),
        float(xs[ki[0]]),
        float(xs[ki[-1]]),
        float(ys[kj[0]]),
        float(ys[kj[-1]]),
        np.array(vals, dtype=complex).reshape(len(ki), len(kj)),
        metadata={"method": "direct", "rep": rep.value, "m": req.m, "warnings": []},
    )
    return TransformResponse(grid=_payload_from_grid(out), metadata=out.metadata)
