"""The Berezin multiplier and its exact coefficient families.

Convolution against the Landau-level kernel h_m acts in Fourier space as
multiplication by

    hhat_m(xi) = e^{-t} P_{n,m}(t),      t = |xi|^2 / 4,

where P_{n,m} is a degree-2m polynomial with rational coefficients and
P_{n,m}(0) = 1 (unit mass).  This module computes P_{n,m} four ways:

* ORACLE        — expand (L_m^{(n-1)})^2 in monomials by exact polynomial
                  algebra and push each power through the Hankel integral;
* KAPPA_FORM    — powers of the Laplacian, coefficients kappa_j;
* FACTORED_FORM — the closed product form with split Laguerre parameters;
* SIGMA_FORM    — the literal printed coefficient table sigma_j.

The first three agree exactly; SIGMA_FORM as printed carries an alternating
sign slip, and the printed hypergeometric closed forms for the c_j / kappa_j
families have genuine poles below the diagonal (j < m).
:func:`convention_report` documents all of this instead of papering over it.

Fourier convention, fixed once for the whole package: forward transform
integral(e^{-i<xi,z>} f(z) dmu(z)) with the real inner product on
R^{2n} ~ C^n, so the Laplacian maps to -|xi|^2 and the level-0 transform is
the heat factor e^{-|xi|^2/4}.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .quadrature import angular_nodes, gauss_laguerre
from .specfun import (
    PoleError,
    RationalPoly,
    binomial_general,
    hyp3f2_terminating,
    laguerre_exact,
    pochhammer,
)

__all__ = [
    "SpaceParams",
    "SymbolRep",
    "CoeffTable",
    "coeff_table",
    "gamma_coeffs",
    "gamma_coeffs_printed",
    "linearization_coeffs",
    "linearization_coeffs_printed",
    "sigma_coeffs_printed",
    "kappa_coeffs",
    "kappa_coeffs_printed",
    "feldheim_A",
    "symbol_poly",
    "hhat",
    "hhat_quadrature_oracle",
    "FamilyComparison",
    "ConventionReport",
    "convention_report",
]


@dataclass(frozen=True)
class SpaceParams:
    """Parameters of one weighted eigenspace over C^n.

    n is the complex dimension (>= 1); m the Landau level (>= 0), i.e. the
    eigenvalue selecting the space.  Every formula in the package is indexed
    by this pair.
    """

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"complex dimension n must be >= 1 (got {self.n})")
        if self.m < 0:
            raise ValueError(f"level m must be >= 0 (got {self.m})")

    @property
    def mass_prefactor(self) -> Fraction:
        """m! / (n)_m — the normalization making the kernel a probability density."""
        return Fraction(math.factorial(self.m)) / pochhammer(self.n, self.m)


class SymbolRep(enum.Enum):
    """Which representation of the multiplier polynomial to expand."""

    ORACLE = "ORACLE"
    SIGMA_FORM = "SIGMA_FORM"
    KAPPA_FORM = "KAPPA_FORM"
    FACTORED_FORM = "FACTORED_FORM"


# -----------------------------------------------------------------------------
# Coefficient families (oracle definitions)
# -----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _squared_laguerre(n: int, m: int) -> RationalPoly:
    L = laguerre_exact(m, n - 1)
    return L * L


def gamma_coeffs(params: SpaceParams) -> list[Fraction]:
    """Monomial family: (L_m^{(n-1)}(u))^2 = sum_j gamma_j u^j / j!.

    Defined by exact expansion of the squared polynomial (the oracle), not by
    any printed closed form.  gamma_j has sign (-1)^j and gamma_0 counts the
    squared value at 0.
    """
    sq = _squared_laguerre(params.n, params.m)
    return [math.factorial(j) * sq.coefficient(j) for j in range(2 * params.m + 1)]


def linearization_coeffs(params: SpaceParams) -> list[Fraction]:
    """Same-parameter Laguerre family: (L_m^{(n-1)})^2 = sum_j c_j L_j^{(n-1)}.

    Obtained by back-substitution down the degree-triangular Laguerre basis,
    entirely in rational arithmetic.
    """
    n, m = params.n, params.m
    rem = list(_squared_laguerre(n, m).padded(2 * m + 1))
    cs = [Fraction(0)] * (2 * m + 1)
    for j in range(2 * m, -1, -1):
        # leading coefficient of L_j^{(alpha)} is (-1)^j / j!
        cj = rem[j] * (-1) ** j * math.factorial(j)
        cs[j] = cj
        if cj:
            Lj = laguerre_exact(j, n - 1)
            for i in range(j + 1):
                rem[i] -= cj * Lj.coefficient(i)
    assert all(r == 0 for r in rem)
    return cs


def kappa_coeffs(params: SpaceParams) -> list[Fraction]:
    """Laplacian-power family: multiplier = e^{-t} sum_j kappa_j (-4t)^j.

    kappa_j = (m!/(n)_m) c_j (-1)^j / (j! 4^j); equivalently the multiplier
    polynomial has monomial coefficients (m!/(n)_m) c_j / j!.
    """
    pref = params.mass_prefactor
    return [
        pref * cj * Fraction((-1) ** j, math.factorial(j) * 4**j)
        for j, cj in enumerate(linearization_coeffs(params))
    ]


def sigma_coeffs_printed(params: SpaceParams) -> list[Fraction]:
    """Literal evaluation of the printed sigma_j double sum, no sign correction.

    sigma_j = m!/(n)_m sum_s C(j,s) C(m+n-1, m-j+s) C(m+n-1, m-s); the
    out-of-range binomials vanish via :func:`binomial_general`.  These values
    are all positive; restoring the multiplier identity needs the (-1)^j
    adjustment that :func:`convention_report` documents.
    """
    n, m = params.n, params.m
    pref = params.mass_prefactor
    out = []
    for j in range(2 * m + 1):
        total = Fraction(0)
        for s in range(j + 1):
            total += (
                binomial_general(j, s)
                * binomial_general(m + n - 1, m - j + s)
                * binomial_general(m + n - 1, m - s)
            )
        out.append(pref * total)
    return out


def feldheim_A(j: int, k: int, l: int, alpha, beta) -> Fraction:
    """Product-linearization coefficient A_j(k, l, alpha, beta).

    A_j = (-1)^{k+l+j} sum_s  C(j,s) C(k+alpha, l-j+s) C(l+beta, k-s),
    exactly as printed; the direct monomial expansion of the squared Laguerre
    polynomial equals A_j(m, m, n-1, n-1) itself, without the extra (-1)^j
    some compositions attach.
    """
    if not 0 <= j <= k + l:
        raise ValueError(f"need 0 <= j <= k+l (got j={j}, k+l={k + l})")
    total = Fraction(0)
    for s in range(j + 1):
        total += (
            binomial_general(j, s)
            * binomial_general(Fraction(alpha) + k, l - j + s)
            * binomial_general(Fraction(beta) + l, k - s)
        )
    return (-1) ** (k + l + j) * total


def gamma_coeffs_printed(params: SpaceParams) -> list[Fraction]:
    """The printed composition gamma_j = (-1)^j A_j(m, m, n-1, n-1).

    Kept verbatim so the sign discrepancy against :func:`gamma_coeffs` stays
    visible in the convention report.
    """
    n, m = params.n, params.m
    return [(-1) ** j * feldheim_A(j, m, m, n - 1, n - 1) for j in range(2 * m + 1)]


def _printed_3f2_value(params: SpaceParams, j: int) -> Optional[Fraction]:
    """Shared 3F2 factor of the printed c_j / kappa_j closed forms; None at poles."""
    n, m = params.n, params.m
    if j < m:
        # Gamma(j - m + 1) pole in the printed denominator
        return None
    try:
        return hyp3f2_terminating(
            Fraction(j, 2) - m,
            Fraction(j + 1, 2) - m,
            Fraction(j + n),
            Fraction(j - m + 1),
            Fraction(j - m + 1),
        )
    except PoleError:
        return None


def linearization_coeffs_printed(params: SpaceParams) -> list[Optional[Fraction]]:
    """Literal printed closed form for c_j; None where the formula has a pole."""
    n, m = params.n, params.m
    out: list[Optional[Fraction]] = []
    for j in range(2 * m + 1):
        F = _printed_3f2_value(params, j)
        if F is None:
            out.append(None)
            continue
        out.append(
            Fraction(2 ** (2 * m - j)) * math.factorial(m) ** 2 * F
            / (math.factorial(2 * m - j) * math.factorial(j - m) ** 2)
        )
    return out


def kappa_coeffs_printed(params: SpaceParams) -> list[Optional[Fraction]]:
    """Literal printed closed form for kappa_j; None where the formula has a pole."""
    n, m = params.n, params.m
    out: list[Optional[Fraction]] = []
    for j in range(2 * m + 1):
        F = _printed_3f2_value(params, j)
        if F is None:
            out.append(None)
            continue
        num = Fraction(2 ** (2 * m)) * math.factorial(m) ** 3 * (-1) ** j * F
        den = (
            pochhammer(n, m)
            * math.factorial(j)
            * 2 ** (3 * j)
            * math.factorial(2 * m - j)
            * math.factorial(j - m) ** 2
        )
        out.append(num / den)
    return out


# -----------------------------------------------------------------------------
# Coefficient table
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class CoeffTable:
    """The four coefficient families of one (n, m), all exact, length 2m+1.

    gamma and c come from the polynomial-algebra oracle, kappa from the exact
    rearrangement of c; sigma is the literal printed table (its convention
    status lives in the report, not here).
    """

    params: SpaceParams
    gamma: tuple[Fraction, ...]
    sigma: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    kappa: tuple[Fraction, ...]


@lru_cache(maxsize=None)
def _coeff_table(n: int, m: int) -> CoeffTable:
    params = SpaceParams(n, m)
    return CoeffTable(
        params=params,
        gamma=tuple(gamma_coeffs(params)),
        sigma=tuple(sigma_coeffs_printed(params)),
        c=tuple(linearization_coeffs(params)),
        kappa=tuple(kappa_coeffs(params)),
    )


def coeff_table(params: SpaceParams) -> CoeffTable:
    """Memoized coefficient table; safe for concurrent readers."""
    return _coeff_table(params.n, params.m)


# -----------------------------------------------------------------------------
# The multiplier polynomial and its evaluations
# -----------------------------------------------------------------------------


def symbol_poly(params: SpaceParams, rep: SymbolRep = SymbolRep.ORACLE) -> RationalPoly:
    """Exact polynomial P_{n,m}(t) with multiplier e^{-t} P_{n,m}(t), t = |xi|^2/4.

    ORACLE, KAPPA_FORM and FACTORED_FORM are equivalent expansions and return
    the identical polynomial.  SIGMA_FORM expands the printed sigma_j table
    literally and is reported as-is, sign slip included (for m >= 1 it
    disagrees; e.g. its value at t = 0 is 5 rather than 1 for n = m = 1).

    In FACTORED_FORM the power factor multiplying the split Laguerre pair
    enters as (+t)^k, matching the (-Laplacian/4) arguments of the Laguerre
    factors; flipping that sign breaks the identity for every n >= 2.
    """
    n, m = params.n, params.m
    if rep is SymbolRep.ORACLE:
        acc = RationalPoly.zero(var="t")
        for j, g in enumerate(gamma_coeffs(params)):
            Lj = laguerre_exact(j, n - 1)
            acc = acc + g * RationalPoly(Lj.coeffs, var="t")
        return params.mass_prefactor * acc
    if rep is SymbolRep.KAPPA_FORM:
        ks = kappa_coeffs(params)
        return RationalPoly([k * Fraction(-4) ** j for j, k in enumerate(ks)], var="t")
    if rep is SymbolRep.FACTORED_FORM:
        acc = RationalPoly.zero(var="t")
        for k in range(m + 1):
            coef = (
                pochhammer(n - 1, k)
                * math.factorial(m - k)
                / (pochhammer(n, m) * math.factorial(k))
            )
            term = (
                RationalPoly.monomial(k, coef, var="t")
                * laguerre_exact(m - k, k)
                * laguerre_exact(m - k, n - 1 + k)
            )
            acc = acc + term
        return RationalPoly(acc.coeffs, var="t")
    if rep is SymbolRep.SIGMA_FORM:
        acc = RationalPoly.zero(var="t")
        for j, s in enumerate(sigma_coeffs_printed(params)):
            acc = acc + s * RationalPoly(laguerre_exact(j, n - 1).coeffs, var="t")
        return acc
    raise ValueError(f"unknown representation {rep!r}")


def hhat(params: SpaceParams, xi_norm_sq: float, rep: SymbolRep = SymbolRep.ORACLE) -> float:
    """Multiplier value e^{-t} P_{n,m}(t) at t = |xi|^2 / 4.

    This is the forward Fourier transform of the convolution kernel under
    the fixed e^{-i<xi,z>} convention with the real inner product on R^{2n}.
    """
    if xi_norm_sq < 0:
        raise ValueError("|xi|^2 must be >= 0")
    t = xi_norm_sq / 4.0
    if t >= 746.0:  # e^{-t} underflows; the polynomial factor cannot rescue it
        return 0.0
    return math.exp(-t) * symbol_poly(params, rep)(t)


def hhat_quadrature_oracle(
    m: int,
    xi,
    radial_nodes: int = 200,
    angular_nodes_count: int = 256,
) -> float:
    """Brute-force Fourier integral of the n = 1 kernel over R^2.

    Polar rule: Gauss-Laguerre in the squared radius, trapezoid in the angle.
    The defaults keep the oracle several orders more accurate than any
    tolerance it polices for |xi| <= 10 and m <= 4; beyond |xi| = 10 accuracy
    degrades and the call is rejected rather than silently returned.
    """
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (2,):
        raise ValueError("xi must be a 2-vector (n = 1 quadrature)")
    xi_norm = float(np.hypot(xi[0], xi[1]))
    if xi_norm > 10.0:
        raise ValueError(
            f"|xi| = {xi_norm:.3g} > 10: quadrature accuracy degrades; refusing to guess"
        )
    u, w = gauss_laguerre(radial_nodes)
    theta = angular_nodes(angular_nodes_count)
    from .specfun import laguerre  # local import to keep module load light

    L2 = laguerre(m, 0, u) ** 2
    phase = np.exp(
        -1j * np.sqrt(u)[:, None] * (xi[0] * np.cos(theta) + xi[1] * np.sin(theta))[None, :]
    )
    val = (w * L2) @ phase.mean(axis=1)
    return float(val.real)


# -----------------------------------------------------------------------------
# Convention report
# -----------------------------------------------------------------------------

VERDICT_EXACT = "EXACT_MATCH"
VERDICT_CONVENTION = "MATCH_UP_TO_CONVENTION"
VERDICT_MISMATCH = "MISMATCH"
VERDICT_POLE = "POLE_UNDEFINED"


@dataclass(frozen=True)
class Adjustment:
    """oracle_j = sign_j * scale * printed_j, with sign in {+1, (-1)^j}."""

    sign: str  # "+1" or "(-1)^j"
    scale: Fraction

    def apply(self, printed: list[Optional[Fraction]]) -> list[Optional[Fraction]]:
        out = []
        for j, p in enumerate(printed):
            if p is None:
                out.append(None)
            else:
                s = -1 if (self.sign == "(-1)^j" and j % 2 == 1) else 1
                out.append(s * self.scale * p)
        return out


@dataclass(frozen=True)
class FamilyComparison:
    family: str
    oracle: tuple[Fraction, ...]
    printed: tuple[Optional[Fraction], ...]
    adjustment: Optional[Adjustment]
    verdict: str
    pole_flags: tuple[bool, ...]

    def to_json_obj(self, params: SpaceParams) -> dict:
        return {
            "params": {"n": params.n, "m": params.m},
            "family": self.family,
            "oracle": [str(v) for v in self.oracle],
            "printed": [None if v is None else str(v) for v in self.printed],
            "adjustment": None
            if self.adjustment is None
            else {"sign": self.adjustment.sign, "scale": str(self.adjustment.scale)},
            "verdict": self.verdict,
            "pole_flags": list(self.pole_flags),
        }


@dataclass(frozen=True)
class ConventionReport:
    params: SpaceParams
    families: tuple[FamilyComparison, ...]

    def family(self, name: str) -> FamilyComparison:
        for f in self.families:
            if f.family == name:
                return f
        raise KeyError(name)

    def to_json_obj(self) -> list[dict]:
        return [f.to_json_obj(self.params) for f in self.families]


def _compare_family(
    family: str,
    oracle: list[Fraction],
    printed: list[Optional[Fraction]],
    scale_candidates: list[Fraction],
) -> FamilyComparison:
    poles = [p is None for p in printed]
    adjustment = None
    if any(poles):
        verdict = VERDICT_POLE
    elif list(printed) == list(oracle):
        verdict = VERDICT_EXACT
        adjustment = Adjustment("+1", Fraction(1))
    else:
        verdict = VERDICT_MISMATCH
        for sign in ("+1", "(-1)^j"):
            for scale in scale_candidates:
                cand = Adjustment(sign, scale)
                if cand.apply(printed) == list(oracle):
                    adjustment, verdict = cand, VERDICT_CONVENTION
                    break
            if adjustment is not None:
                break
    return FamilyComparison(
        family=family,
        oracle=tuple(oracle),
        printed=tuple(printed),
        adjustment=adjustment,
        verdict=verdict,
        pole_flags=tuple(poles),
    )


def convention_report(params: SpaceParams) -> ConventionReport:
    """Reconcile each printed coefficient family with its oracle.

    The adjustment search is deliberately small — signs {+1, (-1)^j} times
    scales {1, m!/(n)_m} — because those are the only discrepancy shapes the
    derivation chain can produce; anything else is reported as MISMATCH (or
    POLE_UNDEFINED when the printed formula is singular at some j).
    """
    scales = [Fraction(1)]
    if params.mass_prefactor != 1:
        scales.append(params.mass_prefactor)
    gam = gamma_coeffs(params)
    comparisons = (
        _compare_family(
            "gamma",
            gam,
            list(gamma_coeffs_printed(params)),
            scales,
        ),
        _compare_family(
            "sigma",
            [params.mass_prefactor * g for g in gam],
            list(sigma_coeffs_printed(params)),
            scales,
        ),
        _compare_family(
            "c",
            linearization_coeffs(params),
            linearization_coeffs_printed(params),
            scales,
        ),
        _compare_family(
            "kappa",
            kappa_coeffs(params),
            kappa_coeffs_printed(params),
            scales,
        ),
    )
    return ConventionReport(params=params, families=comparisons)
