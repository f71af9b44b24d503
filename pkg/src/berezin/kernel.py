"""Reproducing kernel of the level-m eigenspace: closed form, independent
series verification through disk polynomials, and the exact coefficient
identity that links the two.

The closed form is

    K_m(z, w) = pi^{-n} e^{<z,w>} L_m^{(n-1)}(|z - w|^2),

with the Hermitian inner product <z, w> = sum_j z_j conj(w_j).  The series
route rebuilds K_m from products of damped Laguerre functions and disk
polynomials of the angle between z and w; it converges factorially fast and
is the package's ground-truth check that the basis bookkeeping is right.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .specfun import (
    binomial_general,
    dimension_hpq,
    disk_polynomial,
    laguerre,
    pochhammer,
    script_laguerre,
)
from .symbols import SpaceParams

__all__ = [
    "CPoint",
    "reproducing_kernel",
    "kernel_series",
    "addition_formula_residual",
    "coeff_identity_C",
]


@dataclass(frozen=True)
class CPoint:
    """A point of C^n stored as n complex coordinates.

    Constructed from complex coordinates directly or from 2n interleaved
    reals (x1, y1, x2, y2, ...) via :meth:`from_reals`.
    """

    coords: tuple[complex, ...]

    def __init__(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if not coords:
            raise ValueError("a point needs at least one coordinate")
        object.__setattr__(self, "coords", tuple(complex(c) for c in coords))

    @classmethod
    def from_reals(cls, reals: Sequence[float]) -> "CPoint":
        if len(reals) == 0 or len(reals) % 2 != 0:
            raise ValueError("need an even, positive number of real coordinates")
        return cls(tuple(complex(reals[i], reals[i + 1]) for i in range(0, len(reals), 2)))

    @property
    def n(self) -> int:
        return len(self.coords)

    def hermitian_inner(self, other: "CPoint") -> complex:
        """<z, w> = sum_j z_j conj(w_j); <z, z> is real and >= 0."""
        self._check_dim(other)
        return sum(a * b.conjugate() for a, b in zip(self.coords, other.coords))

    def norm_sq(self) -> float:
        return sum(abs(c) ** 2 for c in self.coords)

    def __sub__(self, other: "CPoint") -> "CPoint":
        self._check_dim(other)
        return CPoint(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def distance_sq(self, other: "CPoint") -> float:
        return (self - other).norm_sq()

    def _check_dim(self, other: "CPoint"):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")


def _as_point(z, n: int) -> CPoint:
    if isinstance(z, CPoint):
        if z.n != n:
            raise ValueError(f"point lives in C^{z.n}, parameters expect C^{n}")
        return z
    if n == 1:
        return CPoint(complex(z))
    raise TypeError("pass a CPoint for n > 1")


def reproducing_kernel(params: SpaceParams, z, w) -> complex:
    """Closed-form kernel pi^{-n} e^{<z,w>} L_m^{(n-1)}(|z-w|^2).

    Hermitian symmetry K(z, w) = conj(K(w, z)) holds because the Laguerre
    factor takes a real argument and <w, z> = conj(<z, w>).
    """
    z = _as_point(z, params.n)
    w = _as_point(w, params.n)
    d2 = z.distance_sq(w)
    return math.pi ** (-params.n) * cmath.exp(z.hermitian_inner(w)) * laguerre(
        params.m, params.n - 1, d2
    )


def _float_pochhammer(a: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def kernel_series(params: SpaceParams, z, w, p_max: int) -> complex:
    """Series form of the kernel, truncated at angular degree p_max.

    Rebuilds K_m(z, w) as a double sum over (p, q) of exact combinatorial
    coefficients times damped Laguerre functions of |z|^2, |w|^2 and a disk
    polynomial of the normalized inner product.  Terms decay factorially in
    p, so modest p_max already reaches the closed form to near machine
    precision for desk-scale points.

    Requires n >= 2 (the disk-polynomial parameter is n - 2 and must exceed
    -1) and z, w != 0 (the angle between z and w must be defined).
    """
    n, m = params.n, params.m
    if n < 2:
        raise ValueError(
            "kernel_series requires n >= 2: the disk-polynomial parameter gamma = n - 2 "
            "must satisfy gamma > -1"
        )
    z = _as_point(z, n)
    w = _as_point(w, n)
    az = math.sqrt(z.norm_sq())
    aw = math.sqrt(w.norm_sq())
    if az == 0.0 or aw == 0.0:
        raise ValueError("kernel_series is undefined at the origin: z and w must be nonzero")
    if p_max < 1:
        raise ValueError("p_max must be >= 1")

    zeta = z.hermitian_inner(w) / (az * aw)
    mod = abs(zeta)
    if mod > 1.0:
        # Cauchy-Schwarz guarantees |zeta| <= 1; only rounding noise may be absorbed
        if mod > 1.0 + 1e-14:
            raise ValueError(f"normalized inner product has modulus {mod} > 1")
        zeta /= mod

    sig = n - 1
    pref = (
        math.factorial(n + m - 1)
        / (math.pi**n * math.factorial(m) * math.factorial(n - 1))
        * math.exp((az * az + aw * aw) / 2)
    )
    total = 0.0 + 0.0j
    for p in range(p_max + 1):
        for q in range(m + 1):
            coef = (
                sig
                / (sig + p + q)
                * math.comb(m, q)
                * _float_pochhammer(sig + m + 1, p)
                / (
                    math.factorial(p)
                    * _float_pochhammer(sig + q, p)
                    * _float_pochhammer(sig + p, q)
                )
            )
            total += (
                coef
                * (az * aw) ** (p + q)
                * script_laguerre(m - q, sig + p + q, az * az)
                * script_laguerre(m - q, sig + p + q, aw * aw)
                * disk_polynomial(p, q, sig - 1, zeta)
            )
    return pref * total


def addition_formula_residual(
    sigma: float,
    s: int,
    x: float,
    y: float,
    r: float,
    psi: float,
    k_max: int,
) -> float:
    """|LHS - truncated RHS| of the Laguerre addition formula.

    LHS = exp(i x y r sin psi) * scriptL_s^{(sigma)}(x^2 + y^2 - 2 x y r cos psi);
    RHS expands over products of damped Laguerre functions and disk
    polynomials of r e^{i psi}, truncated at k <= k_max.  Note the radial
    variable r multiplies both the oscillatory phase and the cosine term of
    the Laguerre argument; dropping it from the argument destroys the
    identity for r < 1.
    """
    if sigma <= 0:
        raise ValueError("sigma must be > 0")
    if s < 0:
        raise ValueError("s must be >= 0")
    if x < 0 or y < 0:
        raise ValueError("x and y must be >= 0")
    if not 0 <= r <= 1:
        raise ValueError("r must lie in [0, 1]")
    if not 0 <= psi < 2 * math.pi:
        raise ValueError("psi must lie in [0, 2*pi)")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")

    arg = x * x + y * y - 2 * x * y * r * math.cos(psi)
    lhs = cmath.exp(1j * x * y * r * math.sin(psi)) * script_laguerre(s, sigma, arg)

    zeta = r * cmath.exp(1j * psi)
    rhs = 0.0 + 0.0j
    for k in range(k_max + 1):
        for l in range(s + 1):
            coef = (
                sigma
                / (sigma + k + l)
                * math.comb(s, l)
                * _float_pochhammer(sigma + s + 1, k)
                / (
                    math.factorial(k)
                    * _float_pochhammer(sigma + l, k)
                    * _float_pochhammer(sigma + k, l)
                )
            )
            rhs += (
                coef
                * x ** (k + l)
                * script_laguerre(s - l, sigma + k + l, x * x)
                * y ** (k + l)
                * script_laguerre(s - l, sigma + k + l, y * y)
                * disk_polynomial(k, l, sigma - 1, zeta)
            )
    return abs(lhs - rhs)


def coeff_identity_C(params: SpaceParams, p: int, q: int):
    """Both exact forms of the series coefficient C_{n,p,q} and their equality.

    Left: Gamma(n) d(n;p,q) Gamma(m+n+p) / ((m-q)! Gamma(n+p+q)^2).
    Right: the rearrangement through binomial and Pochhammer factors that the
    series code actually uses.  Returns (lhs, rhs, lhs == rhs) as exact
    rationals; equality must hold for every valid input.
    """
    n, m = params.n, params.m
    if n < 2:
        raise ValueError("coeff_identity_C requires n >= 2 (the dimension count needs (n-2)!)")
    if not 0 <= q <= m:
        raise ValueError(f"q must lie in [0, m] (got q={q}, m={m})")
    if p < 0:
        raise ValueError("p must be >= 0")

    lhs = Fraction(
        math.factorial(n - 1) * dimension_hpq(n, p, q) * math.factorial(m + n + p - 1)
    ) / Fraction(math.factorial(m - q) * math.factorial(n + p + q - 1) ** 2)

    sig = n - 1
    rhs = (
        Fraction(1, math.factorial(n - 2))
        * Fraction(math.factorial(n + m - 1), math.factorial(m) * (n - 1))
        * Fraction(sig, sig + p + q)
        * binomial_general(m, q)
        * pochhammer(sig + m + 1, p)
        / (math.factorial(p) * pochhammer(sig + q, p) * pochhammer(sig + p, q))
    )
    return lhs, rhs, lhs == rhs
