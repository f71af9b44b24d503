"""Grid realization of the level-m transform on C ~ R^2, two ways:

* ``berezin_direct``   — pointwise convolution against the radial kernel by
  the polar quadrature rule, reading the field off the grid bilinearly;
* ``berezin_spectral`` — FFT multiplier: transform, multiply by the
  closed-form symbol e^{-|xi|^2/4} P(|xi|^2/4), transform back.

Plus the finite-difference annihilator/eigenvalue operator used to check
that kernel sections really are level-m eigenfunctions.

Grid convention: uniform, endpoint-inclusive; sample (i, j) sits at
(xmin + i*hx, ymin + j*hy) with hx = (xmax - xmin)/(nx - 1), values stored
row-major (index i*ny + j when flattened).  The file format is a JSON
manifest naming a CSV of "re,im" rows in that order, written with 17
significant digits so round trips are bit-exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .kernel import CPoint
from .quadrature import angular_nodes, gauss_laguerre
from .specfun import laguerre, pochhammer
from .symbols import SpaceParams, SymbolRep, symbol_poly

__all__ = [
    "GridFunction2D",
    "BoundaryMarginError",
    "load_grid",
    "save_grid",
    "h_kernel",
    "berezin_direct",
    "berezin_spectral",
    "tilde_delta_apply",
    "DIRECT_MARGIN",
    "BOUNDARY_DECAY_THRESHOLD",
]

DIRECT_MARGIN = 6.0  # Gaussian support margin for pointwise convolution
BOUNDARY_DECAY_THRESHOLD = 1e-10  # periodization control for the FFT route


class BoundaryMarginError(ValueError):
    """An evaluation point sits closer to the grid boundary than the margin."""

    def __init__(self, point: complex, distance: float, margin: float):
        self.point = point
        self.distance = distance
        self.margin = margin
        super().__init__(
            f"evaluation point {point} is {distance:.3g} from the grid boundary; "
            f"the quadrature needs a margin of {margin:.3g}"
        )


@dataclass
class GridFunction2D:
    """Complex samples of a function on a uniform rectangular grid over R^2."""

    nx: int
    ny: int
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.nx < 8 or self.ny < 8:
            raise ValueError(f"grid must be at least 8x8 (got {self.nx}x{self.ny})")
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise ValueError("domain bounds must satisfy xmax > xmin and ymax > ymin")
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape == (self.nx * self.ny,):
            self.values = self.values.reshape(self.nx, self.ny)
        if self.values.shape != (self.nx, self.ny):
            raise ValueError(
                f"values must have shape ({self.nx}, {self.ny}); got {self.values.shape}"
            )

    @property
    def hx(self) -> float:
        return (self.xmax - self.xmin) / (self.nx - 1)

    @property
    def hy(self) -> float:
        return (self.ymax - self.ymin) / (self.ny - 1)

    @property
    def x(self) -> np.ndarray:
        return self.xmin + self.hx * np.arange(self.nx)

    @property
    def y(self) -> np.ndarray:
        return self.ymin + self.hy * np.arange(self.ny)

    def meshgrid(self):
        return np.meshgrid(self.x, self.y, indexing="ij")

    @classmethod
    def from_callable(cls, fn, nx, ny, xmin, xmax, ymin, ymax) -> "GridFunction2D":
        """Sample a vectorized callable fn(Z) of complex Z = X + iY."""
        grid = cls(nx, ny, xmin, xmax, ymin, ymax, np.zeros((nx, ny), dtype=complex))
        X, Y = grid.meshgrid()
        grid.values = np.asarray(fn(X + 1j * Y), dtype=complex)
        return grid

    def with_values(self, values: np.ndarray, metadata: dict | None = None) -> "GridFunction2D":
        return GridFunction2D(
            self.nx,
            self.ny,
            self.xmin,
            self.xmax,
            self.ymin,
            self.ymax,
            values,
            metadata=dict(metadata or {}),
        )


# -----------------------------------------------------------------------------
# File format: JSON manifest + CSV of "re,im" rows
# -----------------------------------------------------------------------------


def save_grid(grid: GridFunction2D, manifest_path) -> None:
    """Write the manifest and its row-major CSV next to it, 17 significant digits."""
    manifest_path = Path(manifest_path)
    csv_name = manifest_path.stem + ".csv"
    flat = grid.values.reshape(-1)
    with open(manifest_path.parent / csv_name, "w") as fh:
        for v in flat:
            fh.write(f"{v.real:.17g},{v.imag:.17g}\n")
    manifest = {
        "nx": grid.nx,
        "ny": grid.ny,
        "xmin": grid.xmin,
        "xmax": grid.xmax,
        "ymin": grid.ymin,
        "ymax": grid.ymax,
        "csv": csv_name,
    }
    if grid.metadata:
        manifest["metadata"] = grid.metadata
    with open(manifest_path, "w") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")


def load_grid(manifest_path) -> GridFunction2D:
    """Read a manifest + CSV pair written by :func:`save_grid` (or by hand)."""
    manifest_path = Path(manifest_path)
    with open(manifest_path) as fh:
        manifest = json.load(fh)
    for key in ("nx", "ny", "xmin", "xmax", "ymin", "ymax", "csv"):
        if key not in manifest:
            raise ValueError(f"grid manifest is missing required key {key!r}")
    csv_path = Path(manifest["csv"])
    if not csv_path.is_absolute():
        csv_path = manifest_path.parent / csv_path
    raw = np.loadtxt(csv_path, delimiter=",", dtype=float, ndmin=2)
    if raw.shape != (manifest["nx"] * manifest["ny"], 2):
        raise ValueError(
            f"CSV holds {raw.shape[0]} rows of width {raw.shape[1]}; "
            f"expected {manifest['nx'] * manifest['ny']} rows of re,im"
        )
    values = (raw[:, 0] + 1j * raw[:, 1]).reshape(manifest["nx"], manifest["ny"])
    return GridFunction2D(
        manifest["nx"],
        manifest["ny"],
        float(manifest["xmin"]),
        float(manifest["xmax"]),
        float(manifest["ymin"]),
        float(manifest["ymax"]),
        values,
        metadata=dict(manifest.get("metadata", {})),
    )


# -----------------------------------------------------------------------------
# Kernel and transforms
# -----------------------------------------------------------------------------


def h_kernel(params: SpaceParams, z) -> float:
    """Convolution kernel value: (m!/(n)_m) pi^{-n} e^{-|z|^2} (L_m^{(n-1)}(|z|^2))^2.

    Nonnegative, radial, unit mass.
    """
    if not isinstance(z, CPoint):
        z = CPoint(complex(z))
    if z.n != params.n:
        raise ValueError(f"point lives in C^{z.n}, parameters expect C^{params.n}")
    n, m = params.n, params.m
    u = z.norm_sq()
    pref = float(params.mass_prefactor) * math.pi ** (-n)
    return pref * math.exp(-u) * laguerre(m, n - 1, u) ** 2


def _bilinear_sample(grid: GridFunction2D, pts: np.ndarray) -> np.ndarray:
    """Bilinear read of complex points; zero outside the grid (callers keep
    out-of-grid reads under the Gaussian tail via the boundary margin)."""
    gx = (pts.real - grid.xmin) / grid.hx
    gy = (pts.imag - grid.ymin) / grid.hy
    inside = (gx >= 0) & (gx <= grid.nx - 1) & (gy >= 0) & (gy <= grid.ny - 1)
    i0 = np.clip(np.floor(gx).astype(int), 0, grid.nx - 2)
    j0 = np.clip(np.floor(gy).astype(int), 0, grid.ny - 2)
    fx = np.clip(gx - i0, 0.0, 1.0)
    fy = np.clip(gy - j0, 0.0, 1.0)
    v = grid.values
    out = (
        v[i0, j0] * (1 - fx) * (1 - fy)
        + v[i0 + 1, j0] * fx * (1 - fy)
        + v[i0, j0 + 1] * (1 - fx) * fy
        + v[i0 + 1, j0 + 1] * fx * fy
    )
    return np.where(inside, out, 0.0)


def berezin_direct(
    phi: GridFunction2D,
    m: int,
    eval_points: Sequence,
    radial_nodes: int = 64,
    angular_nodes_count: int = 128,
    margin: float = DIRECT_MARGIN,
) -> list[complex]:
    """Pointwise convolution against the level-m kernel (n = 1).

    For each z, integrates pi^{-1} e^{-|z-w|^2} L_m(|z-w|^2)^2 phi(w) dmu(w)
    by Gauss-Laguerre in |z - w|^2 times the angular trapezoid rule, with
    phi read off the grid by bilinear interpolation.  Every evaluation point
    must keep ``margin`` distance from the grid boundary so that reads
    falling outside the grid only ever happen under the Gaussian tail.
    """
    u, w_gl = gauss_laguerre(radial_nodes)
    theta = angular_nodes(angular_nodes_count)
    lag_sq = laguerre(m, 0, u) ** 2
    offsets = np.sqrt(u)[:, None] * np.exp(1j * theta)[None, :]
    out: list[complex] = []
    for z in eval_points:
        zc = complex(z.coords[0]) if isinstance(z, CPoint) else complex(z)
        dist = min(
            zc.real - phi.xmin, phi.xmax - zc.real, zc.imag - phi.ymin, phi.ymax - zc.imag
        )
        if dist < margin - 1e-9:
            raise BoundaryMarginError(zc, dist, margin)
        vals = _bilinear_sample(phi, zc + offsets)
        out.append(complex((w_gl * lag_sq) @ vals.mean(axis=1)))
    return out


def berezin_spectral(
    phi: GridFunction2D,
    m: int,
    rep: SymbolRep = SymbolRep.ORACLE,
    pad_factor: int = 2,
    decay_threshold: float = BOUNDARY_DECAY_THRESHOLD,
) -> GridFunction2D:
    """FFT multiplier realization of the level-m transform (n = 1).

    Zero-pads by ``pad_factor`` per axis, multiplies the DFT by the symbol
    sampled at the angular frequencies xi_k = 2 pi k / (padded extent), and
    inverts.  The three equivalent symbol representations produce
    bit-identical output because their polynomials are equal exactly, before
    float conversion.

    If the field does not decay to ``decay_threshold`` (relative) at the grid
    boundary, the periodization of the convolution is not under control; a
    warning record is attached to the output metadata rather than failing,
    since some fields (constants) periodize exactly.
    """
    warnings: list[dict] = []
    amax = float(np.max(np.abs(phi.values))) if phi.values.size else 0.0
    if amax > 0:
        edge = max(
            float(np.max(np.abs(phi.values[0, :]))),
            float(np.max(np.abs(phi.values[-1, :]))),
            float(np.max(np.abs(phi.values[:, 0]))),
            float(np.max(np.abs(phi.values[:, -1]))),
        )
        if edge > decay_threshold * amax:
            warnings.append(
                {
                    "kind": "boundary_decay",
                    "boundary_max_relative": edge / amax,
                    "threshold": decay_threshold,
                    "message": "field does not decay at the grid boundary; "
                    "periodization error is not controlled",
                }
            )

    pnx, pny = pad_factor * phi.nx, pad_factor * phi.ny
    spectrum = np.fft.fft2(phi.values, s=(pnx, pny))
    fx = 2.0 * np.pi * np.fft.fftfreq(pnx, d=phi.hx)
    fy = 2.0 * np.pi * np.fft.fftfreq(pny, d=phi.hy)
    t = (fx[:, None] ** 2 + fy[None, :] ** 2) / 4.0

    coeffs = symbol_poly(SpaceParams(1, m), rep).float_coeffs()
    poly = np.zeros_like(t)
    for c in reversed(coeffs):
        poly = poly * t + c
    # e^{-t} underflows long before the polynomial factor could overflow;
    # mask to avoid 0 * inf at absurd frequencies
    with np.errstate(over="ignore"):
        multiplier = np.where(t < 746.0, np.exp(-np.minimum(t, 746.0)) * poly, 0.0)

    out_values = np.fft.ifft2(spectrum * multiplier)[: phi.nx, : phi.ny]
    return phi.with_values(
        out_values,
        metadata={"method": "spectral", "rep": rep.value, "m": m, "warnings": warnings},
    )


def tilde_delta_apply(psi: GridFunction2D) -> GridFunction2D:
    """Finite-difference annihilator -d^2/(dz dzbar) + zbar d/dzbar on the grid.

    Wirtinger factors: d^2/(dz dzbar) = (1/4)(dxx + dyy) and
    d/dzbar = (1/2)(dx + i dy), both with second-order central stencils.
    Level-m kernel sections are eigenfunctions with eigenvalue m, up to the
    O(h^2) truncation error of the stencils.

    The boundary ring has no central stencil; it is left as NaN and flagged
    in the metadata, never filled by one-sided differences.
    """
    v = psi.values
    hx, hy = psi.hx, psi.hy
    out = np.full_like(v, complex(math.nan, math.nan))

    vxx = (v[2:, 1:-1] - 2 * v[1:-1, 1:-1] + v[:-2, 1:-1]) / (hx * hx)
    vyy = (v[1:-1, 2:] - 2 * v[1:-1, 1:-1] + v[1:-1, :-2]) / (hy * hy)
    vx = (v[2:, 1:-1] - v[:-2, 1:-1]) / (2 * hx)
    vy = (v[1:-1, 2:] - v[1:-1, :-2]) / (2 * hy)

    X, Y = psi.meshgrid()
    zbar = X[1:-1, 1:-1] - 1j * Y[1:-1, 1:-1]
    out[1:-1, 1:-1] = -0.25 * (vxx + vyy) + zbar * 0.5 * (vx + 1j * vy)
    return psi.with_values(out, metadata={"invalid_margin": 1})
