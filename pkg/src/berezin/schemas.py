"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ParamsModel(BaseModel):
    n: int = Field(ge=1, description="complex dimension")
    m: int = Field(ge=0, le=64, description="Landau level (exact-arithmetic guard at 64)")


class CoeffsRequest(ParamsModel):
    pass


class AdjustmentModel(BaseModel):
    sign: str
    scale: str


class FamilyReportModel(BaseModel):
    params: dict
    family: str
    oracle: list[str]
    printed: list[Optional[str]]
    adjustment: Optional[AdjustmentModel]
    verdict: str
    pole_flags: list[bool]


class CoeffsResponse(BaseModel):
    params: ParamsModel
    families: dict[str, list[str]]
    report: list[FamilyReportModel]


class KernelRequest(ParamsModel):
    z: list[float] = Field(description="2n interleaved reals: x1, y1, ...")
    w: list[float]

    @model_validator(mode="after")
    def _check_arity(self):
        if len(self.z) != 2 * self.n or len(self.w) != 2 * self.n:
            raise ValueError(f"z and w need exactly {2 * self.n} real coordinates for n={self.n}")
        return self


class ComplexValue(BaseModel):
    re: float
    im: float


class KernelResponse(BaseModel):
    value: ComplexValue


class SymbolRequest(ParamsModel):
    xi_norm: float = Field(ge=0, description="|xi|")


class SymbolResponse(BaseModel):
    value: float


class VerifyRequest(BaseModel):
    suite: Literal["kernel", "addition", "symbols", "fourier", "coherent", "eigen", "all"]
    n: Optional[int] = None
    m: Optional[int] = None
    tol: Optional[float] = None


class CaseModel(BaseModel):
    name: str
    status: Literal["pass", "fail"]
    measured: float
    tol: float


class VerifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    suite: str
    params: dict
    cases: list[CaseModel]
    passed: bool = Field(alias="pass")


class GridPayload(BaseModel):
    nx: int = Field(ge=8)
    ny: int = Field(ge=8)
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    values: list[tuple[float, float]] = Field(description="row-major (re, im) pairs")

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.values) != self.nx * self.ny:
            raise ValueError(f"values must hold nx*ny = {self.nx * self.ny} samples")
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise ValueError("domain bounds must satisfy xmax > xmin and ymax > ymin")
        return self


class TransformRequest(BaseModel):
    grid: GridPayload
    m: int = Field(ge=0, le=64)
    method: Literal["spectral", "direct"] = "spectral"
    rep: Literal["ORACLE", "SIGMA_FORM", "KAPPA_FORM", "FACTORED_FORM"] = "ORACLE"


class TransformResponse(BaseModel):
    grid: GridPayload
    metadata: dict


class HealthResponse(BaseModel):
    status: str
    version: str
