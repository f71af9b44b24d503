"""Classical special functions: Laguerre, Jacobi, disk polynomials, Bessel J,
Pochhammer symbols, harmonic dimension counts, and terminating hypergeometric
series.

Two evaluation regimes coexist deliberately:

* floating point, via stable three-term recurrences (``laguerre``,
  ``jacobi_normalized``, ...), used by the quadrature and grid code;
* exact rational arithmetic (``laguerre_exact``, ``pochhammer``,
  ``hyp3f2_terminating``, :class:`RationalPoly`), used as the oracle for every
  coefficient identity.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

import mpmath

__all__ = [
    "Rational",
    "RationalPoly",
    "PoleError",
    "pochhammer",
    "binomial_general",
    "laguerre",
    "laguerre_exact",
    "script_laguerre",
    "jacobi_normalized",
    "disk_polynomial",
    "dimension_hpq",
    "bessel_j",
    "hyp1f1_terminating",
    "hyp3f2_terminating",
]

# Exact rational scalar: fractions.Fraction already guarantees a positive,
# reduced denominator after every operation.
Rational = Fraction

RationalLike = Union[Fraction, int]


class PoleError(ArithmeticError):
    """A denominator Pochhammer vanished before a terminating series ended.

    ``term_index`` is the index of the first term that cannot be formed.
    """

    def __init__(self, term_index: int, message: str | None = None):
        self.term_index = term_index
        super().__init__(message or f"pole encountered at series term {term_index}")


class RationalPoly:
    """Univariate polynomial with exact rational coefficients.

    ``coeffs[j]`` is the coefficient of degree ``j``.  Trailing zeros are
    stripped on construction, so the trailing coefficient is nonzero unless
    the polynomial is identically zero (empty coefficient tuple).  Products
    are computed exactly; the degree of a product is the sum of the degrees.

    ``var`` is only a display name ("u" or "t" depending on context) and is
    ignored by equality.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence[RationalLike], var: str = "u"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, var: str = "u") -> "RationalPoly":
        return cls([], var=var)

    @classmethod
    def one(cls, var: str = "u") -> "RationalPoly":
        return cls([1], var=var)

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1, var: str = "u") -> "RationalPoly":
        return cls([0] * degree + [coeff], var=var)

    # -- structure -------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def padded(self, length: int) -> list[Fraction]:
        out = list(self.coeffs)
        out.extend([Fraction(0)] * (length - len(out)))
        return out

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            [self.coefficient(j) + other.coefficient(j) for j in range(n)], var=self.var
        )

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            [self.coefficient(j) - other.coefficient(j) for j in range(n)], var=self.var
        )

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-c for c in self.coeffs], var=self.var)

    def __mul__(self, other):
        if isinstance(other, RationalPoly):
            if not self.coeffs or not other.coeffs:
                return RationalPoly.zero(var=self.var)
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RationalPoly(out, var=self.var)
        return RationalPoly([c * Fraction(other) for c in self.coeffs], var=self.var)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner's scheme; exact for Fraction/int arguments."""
        if isinstance(x, (Fraction, int)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"RationalPoly([{body}], var={self.var!r})"


# -----------------------------------------------------------------------------
# Pochhammer / binomial / dimension counts
# -----------------------------------------------------------------------------


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1); empty product is 1."""
    if k < 0:
        raise ValueError("pochhammer order must be >= 0")
    out = Fraction(1)
    a = Fraction(a)
    for i in range(k):
        out *= a + i
    return out


def binomial_general(a: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient via the falling factorial.

    Returns 0 for k < 0 and, automatically, for integer a with 0 <= a < k.
    The out-of-range-zero convention is load-bearing for the finite
    coefficient sums in :mod:`berezin.symbols`, whose summation indices
    run outside the classical range.
    """
    if k < 0:
        return Fraction(0)
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a - i
    return out / math.factorial(k)


def dimension_hpq(n: int, p: int, q: int) -> int:
    """Dimension of the bihomogeneous spherical-harmonic space H(p, q) on
    the unit sphere of C^n.

    Only defined for n >= 2: the closed form contains (n-2)!.
    """
    if n < 2:
        raise ValueError(f"dimension_hpq requires n >= 2 (got n={n}): the formula contains (n-2)!")
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    num = (p + q + n - 1) * math.factorial(p + n - 2) * math.factorial(q + n - 2)
    den = math.factorial(p) * math.factorial(q) * math.factorial(n - 1) * math.factorial(n - 2)
    d, r = divmod(num, den)
    assert r == 0
    return d


# -----------------------------------------------------------------------------
# Laguerre
# -----------------------------------------------------------------------------


def laguerre(k: int, alpha, x):
    """Generalized Laguerre polynomial L_k^(alpha)(x).

    Uses the upward three-term recurrence in the degree, which is stable for
    alpha > -1 (the monomial expansion cancels catastrophically for large x
    and is reserved for the exact oracle ``laguerre_exact``).

    ``x`` may be a numpy array; the recurrence broadcasts.
    """
    if k < 0:
        raise ValueError("degree k must be >= 0")
    if alpha <= -1:
        raise ValueError(f"laguerre parameter must satisfy alpha > -1 (got {alpha})")
    if k == 0:
        return x * 0 + 1.0
    prev = x * 0 + 1.0
    cur = 1.0 + alpha - x
    for i in range(1, k):
        prev, cur = cur, ((2 * i + 1 + alpha - x) * cur - (i + alpha) * prev) / (i + 1)
    return cur


def laguerre_exact(k: int, alpha: RationalLike) -> RationalPoly:
    """Exact coefficients of L_k^(alpha) as a :class:`RationalPoly` in u.

    Same recurrence as :func:`laguerre`, run in rational arithmetic; it is the
    oracle against which the float recurrence and every printed coefficient
    formula are compared.
    """
    if k < 0:
        raise ValueError("degree k must be >= 0")
    alpha = Fraction(alpha)
    u = RationalPoly.monomial(1)
    prev = RationalPoly.one()
    if k == 0:
        return prev
    cur = RationalPoly([1 + alpha, -1])
    for i in range(1, k):
        nxt = (RationalPoly([2 * i + 1 + alpha]) - u) * cur - (i + alpha) * prev
        prev, cur = cur, Fraction(1, i + 1) * nxt
    return cur


def script_laguerre(k: int, alpha, u):
    """Damped, unit-normalized Laguerre variant.

    [k! Gamma(alpha+1) / Gamma(k+alpha+1)] * exp(-u/2) * L_k^(alpha)(u);
    equals 1 at u = 0 and stays O(1) on [0, inf), which is what the kernel
    series and the addition formula need to avoid overflow.
    """
    if alpha <= -1:
        raise ValueError(f"parameter must satisfy alpha > -1 (got {alpha})")
    if u < 0:
        raise ValueError("argument must be >= 0")
    pref = 1.0
    for i in range(k):
        pref *= (i + 1) / (alpha + 1 + i)
    return pref * math.exp(-u / 2) * laguerre(k, alpha, u)


# -----------------------------------------------------------------------------
# Jacobi / disk polynomials
# -----------------------------------------------------------------------------


def _jacobi(k: int, a, b, x: float) -> float:
    if k == 0:
        return 1.0
    p0 = 1.0
    p1 = 0.5 * ((a - b) + (a + b + 2) * x)
    for i in range(2, k + 1):
        c1 = 2 * i * (i + a + b) * (2 * i + a + b - 2)
        c2 = (2 * i + a + b - 1) * ((2 * i + a + b) * (2 * i + a + b - 2) * x + a * a - b * b)
        c3 = 2 * (i + a - 1) * (i + b - 1) * (2 * i + a + b)
        p0, p1 = p1, (c2 * p1 - c3 * p0) / c1
    return p1


def jacobi_normalized(k: int, alpha, beta, x: float) -> float:
    """Jacobi polynomial normalized to 1 at the right endpoint:
    P_k^(alpha,beta)(x) / P_k^(alpha,beta)(1).

    The value at 1 is (alpha+1)_k / k! > 0 for alpha > -1, so the
    normalization never divides by zero.  Evaluating numerator and
    denominator through the same recurrence makes the value at x = 1
    exactly 1.0 in floating point.
    """
    if k < 0:
        raise ValueError("degree k must be >= 0")
    if alpha <= -1 or beta <= -1:
        raise ValueError("jacobi parameters must be > -1")
    return _jacobi(k, alpha, beta, x) / _jacobi(k, alpha, beta, 1.0)


def disk_polynomial(p: int, q: int, gamma, xi: complex) -> complex:
    """Two-index disk polynomial R_{p,q}^gamma on the closed unit disk.

    R_{p,q}^gamma(xi) = xi^(p-q) (resp. conj(xi)^(q-p)) times the normalized
    Jacobi polynomial of degree min(p,q) with parameters (gamma, |p-q|)
    evaluated at 2|xi|^2 - 1.  At xi = 0 with p != q the power factor makes
    the value 0, so no phase needs to be defined there.
    """
    if p < 0 or q < 0:
        raise ValueError("indices p, q must be >= 0")
    if gamma <= -1:
        raise ValueError("disk polynomial parameter must be > -1")
    xi = complex(xi)
    mod2 = xi.real * xi.real + xi.imag * xi.imag
    if mod2 > 1.0 + 1e-12:
        raise ValueError(f"|xi| = {math.sqrt(mod2)} lies outside the closed unit disk")
    mod2 = min(mod2, 1.0)
    phase = xi ** (p - q) if p >= q else xi.conjugate() ** (q - p)
    return phase * jacobi_normalized(min(p, q), gamma, abs(p - q), 2 * mod2 - 1)


# -----------------------------------------------------------------------------
# Bessel J
# -----------------------------------------------------------------------------


def bessel_j(nu: int, x: float) -> float:
    """Bessel function of the first kind, integer order, x >= 0.

    Ascending power series with arbitrary-precision accumulation (mpmath),
    sized so the alternating-series cancellation — which grows like e^x —
    never touches the returned double.  Good to full double precision on
    [0, 50], which covers every quadrature in this package.
    """
    if nu < 0:
        raise ValueError("order must be a non-negative integer")
    if x < 0:
        raise ValueError("argument must be >= 0")
    if x == 0.0:
        return 1.0 if nu == 0 else 0.0
    # digits lost to cancellation ~ x*log10(e); keep 25 spare
    dps = 25 + int(0.45 * x)
    with mpmath.workdps(dps):
        h = mpmath.mpf(x) / 2
        h2 = h * h
        term = h**nu / mpmath.factorial(nu)
        total = term
        k = 0
        while True:
            term = -term * h2 / ((k + 1) * (k + 1 + nu))
            total += term
            k += 1
            if (k + 1) * (k + 1 + nu) > float(h2) and abs(term) < mpmath.mpf(10) ** (-dps) * (
                1 + abs(total)
            ):
                break
            if k > 2000:  # unreachable for sane arguments
                raise RuntimeError(f"bessel_j series did not converge for nu={nu}, x={x}")
        return float(total)


# -----------------------------------------------------------------------------
# Terminating hypergeometric series
# -----------------------------------------------------------------------------


def hyp1f1_terminating(k: int, alpha, u) -> float:
    """Terminating confluent series 1F1(-k; alpha; u) = sum_i (-k)_i u^i / ((alpha)_i i!).

    ``alpha`` is the bottom parameter as written: the degree-1 case is
    1 - u/alpha.  Bottom parameters in {0, -1, ..., -k+1} make a term
    denominator vanish before the series terminates and are rejected.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    af = float(alpha)
    if af <= 0 and af == int(af) and af >= -k + 1:
        raise ValueError(
            f"bottom parameter {alpha} is a non-positive integer >= {-k + 1}; series undefined"
        )
    total = 1.0
    term = 1.0
    for i in range(k):
        term *= (-k + i) * u / ((af + i) * (i + 1))
        total += term
    return total


def hyp3f2_terminating(a1, a2, a3, b1, b2) -> Fraction:
    """Exact terminating 3F2(a1, a2, a3; b1, b2; 1) in rational arithmetic.

    At least one top parameter must be a non-positive integer.  If a bottom
    Pochhammer vanishes before the series terminates, raises
    :class:`PoleError` carrying the offending term index — deliberately: the
    regularized value is a modeling decision this routine must not make.
    """
    tops = [Fraction(a) for a in (a1, a2, a3)]
    bots = [Fraction(b) for b in (b1, b2)]
    stops = [-int(a) for a in tops if a.denominator == 1 and a <= 0]
    if not stops:
        raise ValueError("series does not terminate: no top parameter is a non-positive integer")
    k_max = min(stops)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(k_max + 1):
        total += term
        if k == k_max:
            break
        num = (tops[0] + k) * (tops[1] + k) * (tops[2] + k)
        if num == 0:  # an earlier top parameter already terminated the series
            break
        den = (bots[0] + k) * (bots[1] + k) * (k + 1)
        if den == 0:
            raise PoleError(k + 1)
        term = term * num / den
    return total
