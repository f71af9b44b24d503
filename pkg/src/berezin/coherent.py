"""Coherent-state layer: normalization, overlaps, the resolution-of-identity
check, and the lower-symbol quadrature that realizes the transform pointwise.

The abstract Hilbert space behind the states is never materialized — every
quantity here reduces to closed forms in the reproducing kernel, which is all
that overlaps can observe.  The quadrature routines are restricted to n = 1,
where the 2D polar rule (Gauss-Laguerre in the squared radius, trapezoid in
the angle) is spectrally accurate for Gaussian-times-smooth integrands.
"""

from __future__ import annotations

import cmath
import math
from typing import Callable

import numpy as np

from .kernel import CPoint, _as_point
from .quadrature import polar_samples
from .specfun import laguerre
from .symbols import SpaceParams

__all__ = [
    "normalization_factor",
    "overlap",
    "resolution_check",
    "expectation_quadrature",
]


def normalization_factor(params: SpaceParams, z) -> float:
    """N(z) = pi^{-n} C(n+m-1, m) e^{|z|^2}, the squared norm of the state at z.

    Coincides with the kernel on the diagonal, K_m(z, z).
    """
    z = _as_point(z, params.n)
    n, m = params.n, params.m
    return math.pi ** (-n) * math.comb(n + m - 1, m) * math.exp(z.norm_sq())


def overlap(params: SpaceParams, z, w) -> complex:
    """Coherent-state overlap <z, m | w, m>, modulus <= 1.

    Computed as exp(<z,w> - |z|^2/2 - |w|^2/2) * L_m(|z-w|^2) / L_m(0), the
    normalized kernel arranged so that no intermediate exponential can
    overflow.  Equal to 1 at w = z; conjugate-symmetric in (z, w).
    """
    z = _as_point(z, params.n)
    w = _as_point(w, params.n)
    n, m = params.n, params.m
    expo = z.hermitian_inner(w) - (z.norm_sq() + w.norm_sq()) / 2
    lag_ratio = laguerre(m, n - 1, z.distance_sq(w)) / laguerre(m, n - 1, 0.0)
    return cmath.exp(expo) * lag_ratio


def resolution_check(
    m: int,
    z,
    quad_radius: float = 8.0,
    radial_nodes: int = 64,
    angular_nodes_count: int = 128,
) -> float:
    """Numerical resolution-of-identity test at a point of C^1.

    Integrates |<z, m | w, m>|^2 N(w) e^{-|w|^2} over w in C by the polar rule
    centered at z, truncated at |w - z| <= quad_radius.  The exact value is 1
    for every m and z; the returned number is the quadrature's verdict,
    assembled from the overlap and normalization routines themselves rather
    than from any pre-simplified integrand.

    Raises if the truncation radius leaves a Gaussian tail above 1e-12 — a
    non-converged quadrature is reported, never silently returned.
    """
    params = SpaceParams(1, m)
    zc = complex(_as_point(z, 1).coords[0])
    r2 = quad_radius * quad_radius
    # tail estimate at the truncation radius: e^{-R^2} (L_m(R^2)/L_m(0))^2
    tail = math.exp(-r2) * (laguerre(m, 0, r2) / laguerre(m, 0, 0.0)) ** 2
    if tail > 1e-12:
        raise ValueError(
            f"quad_radius={quad_radius} leaves a truncation tail ~{tail:.2e} > 1e-12; "
            "quadrature not converged"
        )
    u, w_gl, pts = polar_samples(zc, radial_nodes, angular_nodes_count)
    zp = CPoint(zc)
    total = 0.0
    for ui, wi, ring in zip(u, w_gl, pts):
        if ui > r2:
            break
        acc = 0.0
        for wc in ring:
            wp = CPoint(wc)
            acc += (
                abs(overlap(params, zp, wp)) ** 2
                * normalization_factor(params, wp)
                * math.exp(-abs(wc) ** 2)
            )
        # the Gauss-Laguerre weight carries e^{-u}; the integrand does not
        total += wi * math.exp(ui) * acc / len(ring)
    # dmu = (1/2) du dtheta; the angular mean absorbed 1/(2 pi)
    return total * math.pi


def expectation_quadrature(
    m: int,
    phi: Callable[[np.ndarray], np.ndarray],
    z,
    radial_nodes: int = 64,
    angular_nodes_count: int = 128,
) -> complex:
    """Lower symbol of the observable phi in the state at z (n = 1).

    Evaluates pi^{-1} * integral over C of e^{-|z-w|^2} (L_m(|z-w|^2))^2
    phi(w) dmu(w) by the polar rule centered at z.  By construction this is
    the transform of phi evaluated pointwise at z, with phi supplied as a
    callable (vectorized over complex numpy arrays) rather than a grid, so
    no interpolation error enters this verification path.
    """
    zc = complex(_as_point(z, 1).coords[0])
    u, w_gl, pts = polar_samples(zc, radial_nodes, angular_nodes_count)
    lag_sq = laguerre(m, 0, u) ** 2
    vals = np.asarray(phi(pts), dtype=complex)
    if vals.shape != pts.shape:
        raise ValueError("phi must evaluate elementwise on a complex array")
    # (1/pi) * (1/2) du dtheta with the e^{-u} weight inside Gauss-Laguerre
    return complex((w_gl * lag_sq) @ vals.mean(axis=1))
