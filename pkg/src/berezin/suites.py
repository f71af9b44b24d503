"""Named verification suites.

Each suite maps to a fixed set of module invariants with pinned default
tolerances; the CLI and the HTTP service both run suites through
:func:`run_suite` and emit the same JSON shape.  All randomness is seeded,
so identical inputs produce identical reports.

A case records (name, status, measured, tol).  For residual-style cases the
status is pass iff measured <= tol; cases that measure a convergence order
pass iff measured >= tol.  Exact rational identities report the number of
failing instances against tol = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import coherent, kernel, symbols, transform
from .kernel import CPoint
from .quadrature import gauss_laguerre
from .specfun import RationalPoly, bessel_j, laguerre
from .symbols import SpaceParams, SymbolRep

__all__ = ["SUITE_NAMES", "CaseResult", "run_suite"]

SUITE_NAMES = ("kernel", "addition", "symbols", "fourier", "coherent", "eigen", "all")

_SEED = 20260810


@dataclass
class CaseResult:
    name: str
    measured: float
    tol: float
    higher_is_better: bool = False

    @property
    def passed(self) -> bool:
        if self.higher_is_better:
            return self.measured >= self.tol
        return self.measured <= self.tol

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "measured": self.measured,
            "tol": self.tol,
        }


def _random_points(rng, n: int, count: int, radius: float = 1.5) -> list[CPoint]:
    out = []
    for _ in range(count):
        v = rng.uniform(-1.0, 1.0, 2 * n) * (radius / math.sqrt(2 * n))
        out.append(CPoint.from_reals(v))
    return out


def _suite_symbols(n: int, m: int, tol: float | None) -> list[CaseResult]:
    params = SpaceParams(n, m)
    reps = (SymbolRep.ORACLE, SymbolRep.KAPPA_FORM, SymbolRep.FACTORED_FORM)
    polys = [symbols.symbol_poly(params, rep) for rep in reps]
    cases = [
        CaseResult(
            "representation_equivalence_exact",
            float(sum(p != polys[0] for p in polys[1:])),
            0.0,
        ),
        CaseResult("unit_mass_at_zero_exact", float(abs(polys[0](0) - 1)), 0.0),
        CaseResult("symbol_degree_2m", float(abs(polys[0].degree - 2 * m)), 0.0),
    ]
    # monomial rearrangement of the linearization family reproduces the symbol
    cs = symbols.linearization_coeffs(params)
    mono = RationalPoly(
        [params.mass_prefactor * c / math.factorial(j) for j, c in enumerate(cs)], var="t"
    )
    cases.append(
        CaseResult("linearization_monomial_identity_exact", float(mono != polys[0]), 0.0)
    )
    report = symbols.convention_report(params)
    sigma_ok = report.family("sigma").verdict in (
        symbols.VERDICT_EXACT,
        symbols.VERDICT_CONVENTION,
    )
    cases.append(CaseResult("sigma_family_reconciled", 0.0 if sigma_ok else 1.0, 0.0))
    if n == 1 and m <= 4:
        rng = np.random.default_rng(_SEED)
        worst = 0.0
        for _ in range(50):
            xi = rng.uniform(-8 / math.sqrt(2), 8 / math.sqrt(2), 2)
            got = symbols.hhat(params, float(xi[0] ** 2 + xi[1] ** 2))
            worst = max(worst, abs(got - symbols.hhat_quadrature_oracle(m, xi)))
        cases.append(CaseResult("fourier_multiplier_vs_quadrature", worst, tol or 1e-7))
    return cases


def _suite_fourier(n: int, m: int, tol: float | None) -> list[CaseResult]:
    t = tol or 1e-8
    u, w = gauss_laguerre(64)
    worst1 = 0.0
    for s in range(4):
        for nu in range(3):
            for z in (0.5, 1.0, 2.0):
                # substitute u = x^2 in the Gaussian-power Hankel integral
                vals = [0.5 * ui ** (s + nu / 2) * bessel_j(nu, 2 * math.sqrt(ui * z)) for ui in u]
                got = float(np.dot(w, vals))
                want = math.factorial(s) / 2 * math.exp(-z) * z ** (nu / 2) * laguerre(s, nu, z)
                worst1 = max(worst1, abs(got - want))
    worst2 = 0.0
    for s in range(4):
        for nu in range(3):
            for uu in (0.5, 1.0, 2.0):
                vals = [
                    0.5 * ui ** (nu / 2) * laguerre(s, nu, ui) * bessel_j(nu, math.sqrt(ui) * uu)
                    for ui in u
                ]
                got = float(np.dot(w, vals))
                want = (
                    1.0 / (2 * math.factorial(s)) * (uu / 2) ** (2 * s + nu) * math.exp(-uu * uu / 4)
                )
                worst2 = max(worst2, abs(got - want))
    cases = [
        CaseResult("hankel_gaussian_power_identity", worst1, t),
        CaseResult("hankel_gaussian_laguerre_identity", worst2, t),
    ]
    if n == 1 and m <= 4:
        rng = np.random.default_rng(_SEED + 1)
        worst = 0.0
        for _ in range(25):
            xi = rng.uniform(-5, 5, 2)
            got = symbols.hhat(SpaceParams(1, m), float(xi[0] ** 2 + xi[1] ** 2))
            worst = max(worst, abs(got - symbols.hhat_quadrature_oracle(m, xi)))
        cases.append(CaseResult("fourier_multiplier_vs_quadrature", worst, tol or 1e-7))
    return cases


def _suite_kernel(n: int, m: int, tol: float | None) -> list[CaseResult]:
    if n < 2:
        raise ValueError("the kernel suite needs n >= 2 (series route undefined for n = 1)")
    params = SpaceParams(n, m)
    rng = np.random.default_rng(_SEED + 2)
    t = tol or 1e-7

    worst_rel = 0.0
    worst_herm = 0.0
    for _ in range(20):
        z, w = _random_points(rng, n, 2)
        closed = kernel.reproducing_kernel(params, z, w)
        series = kernel.kernel_series(params, z, w, p_max=80)
        worst_rel = max(worst_rel, abs(series - closed) / abs(closed))
        worst_herm = max(
            worst_herm, abs(closed - kernel.reproducing_kernel(params, w, z).conjugate())
        )
    cases = [
        CaseResult("series_matches_closed_form_rel", worst_rel, t),
        CaseResult("hermitian_symmetry", worst_herm, 1e-12 if tol is None else tol),
    ]

    bad = 0
    for p in range(7):
        for q in range(m + 1):
            _, _, equal = kernel.coeff_identity_C(params, p, q)
            bad += 0 if equal else 1
    cases.append(CaseResult("series_coefficient_identity_exact", float(bad), 0.0))

    pts = _random_points(rng, n, 6)
    gram = np.array(
        [[kernel.reproducing_kernel(params, a, b) for b in pts] for a in pts], dtype=complex
    )
    eigs = np.linalg.eigvalsh((gram + gram.conj().T) / 2)
    trace = float(np.trace(gram).real)
    cases.append(
        CaseResult("gram_matrix_nonnegative", max(0.0, float(-eigs.min()) / trace), 1e-10)
    )
    return cases


def _suite_addition(n: int, m: int, tol: float | None) -> list[CaseResult]:
    if n < 2:
        raise ValueError("the addition suite needs n >= 2 (sigma = n - 1 must be positive)")
    sigma = float(n - 1)
    t = tol or 1e-8
    rng = np.random.default_rng(_SEED + 3)
    worst = 0.0
    for s in range(max(3, m) + 1):
        for _ in range(10):
            x, y = rng.uniform(0.0, 1.5, 2)
            r = rng.uniform(0.0, 1.0)
            psi = rng.uniform(0.0, 2 * math.pi)
            worst = max(worst, kernel.addition_formula_residual(sigma, s, x, y, r, psi, k_max=80))
    return [CaseResult("addition_formula_residual", worst, t)]


def _suite_coherent(n: int, m: int, tol: float | None) -> list[CaseResult]:
    if n != 1:
        raise ValueError("the coherent suite runs the n = 1 quadrature checks")
    t = tol or 1e-6
    rng = np.random.default_rng(_SEED + 4)
    params = SpaceParams(1, m)

    worst_sym = 0.0
    worst_mod = 0.0
    for _ in range(50):
        z = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        w = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        ov = coherent.overlap(params, CPoint(z), CPoint(w))
        worst_sym = max(
            worst_sym, abs(ov - coherent.overlap(params, CPoint(w), CPoint(z)).conjugate())
        )
        worst_mod = max(worst_mod, abs(ov) - 1.0)
    cases = [
        CaseResult("overlap_conjugate_symmetry", worst_sym, 1e-12 if tol is None else tol),
        CaseResult("overlap_modulus_bound", max(0.0, worst_mod), 1e-12 if tol is None else tol),
    ]

    worst_res = 0.0
    for mm in range(min(m, 3) + 1):
        for z in (0.0, 0.9 + 0.6j, 1.5):
            worst_res = max(worst_res, abs(coherent.resolution_check(mm, z) - 1.0))
    cases.append(CaseResult("resolution_of_identity", worst_res, t))

    # lower-symbol quadrature against the spectral route on a smooth bump
    bump = lambda w: np.exp(-np.abs(w) ** 2 / 2)
    grid = transform.GridFunction2D.from_callable(bump, 256, 256, -8, 8, -8, 8)
    out = transform.berezin_spectral(grid, m)
    worst_cons = 0.0
    for i in (118, 128, 139):
        for j in (122, 128, 135):
            z = grid.x[i] + 1j * grid.y[j]
            got = coherent.expectation_quadrature(m, bump, z)
            worst_cons = max(worst_cons, abs(got - out.values[i, j]))
    cases.append(CaseResult("lower_symbol_vs_spectral", worst_cons, t))
    return cases


def _suite_eigen(n: int, m: int, tol: float | None) -> list[CaseResult]:
    if n != 1:
        raise ValueError("the eigen suite runs on 2D grids (n = 1)")
    t = tol or 1.8
    w0 = CPoint(0.3 + 0.2j)
    cases = []
    for mm in range(min(m, 2) + 1):
        params = SpaceParams(1, mm)
        errs = []
        for nx in (65, 129, 257):
            grid = transform.GridFunction2D.from_callable(
                lambda Z: np.array(
                    [[kernel.reproducing_kernel(params, CPoint(zc), w0) for zc in row] for row in Z]
                ),
                nx,
                nx,
                -2,
                2,
                -2,
                2,
            )
            applied = transform.tilde_delta_apply(grid)
            resid = applied.values[1:-1, 1:-1] - mm * grid.values[1:-1, 1:-1]
            errs.append(float(np.max(np.abs(resid)) / np.max(np.abs(grid.values))))
        orders = [math.log2(errs[i] / errs[i + 1]) for i in range(len(errs) - 1)]
        cases.append(
            CaseResult(f"eigenvalue_fd_order_m{mm}", min(orders), t, higher_is_better=True)
        )
    return cases


_SUITES = {
    "symbols": _suite_symbols,
    "fourier": _suite_fourier,
    "kernel": _suite_kernel,
    "addition": _suite_addition,
    "coherent": _suite_coherent,
    "eigen": _suite_eigen,
}

_DEFAULT_PARAMS = {
    "symbols": (1, 1),
    "fourier": (1, 1),
    "kernel": (2, 1),
    "addition": (2, 2),
    "coherent": (1, 2),
    "eigen": (1, 2),
}


def run_suite(
    suite: str, n: int | None = None, m: int | None = None, tol: float | None = None
) -> dict:
    """Run one named suite and return the JSON-ready report.

    ``all`` runs every suite at its own default parameters (user n/m are
    ignored there: no single (n, m) is valid for every suite).
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    if suite == "all":
        cases: list[CaseResult] = []
        for name, fn in _SUITES.items():
            dn, dm = _DEFAULT_PARAMS[name]
            sub = fn(dn, dm, tol)
            for c in sub:
                c.name = f"{name}.{c.name}"
            cases.extend(sub)
        params = {"n": None, "m": None}
    else:
        dn, dm = _DEFAULT_PARAMS[suite]
        n_eff = dn if n is None else n
        m_eff = dm if m is None else m
        cases = _SUITES[suite](n_eff, m_eff, tol)
        params = {"n": n_eff, "m": m_eff}
    return {
        "suite": suite,
        "params": params,
        "cases": [c.to_json_obj() for c in cases],
        "pass": all(c.passed for c in cases),
    }
