"""Landau-level Berezin transforms over C^n.

Reproducing kernels and coherent-state overlaps in closed form, the exact
rational coefficient families behind the transform's Fourier multiplier, and
two interchangeable grid backends (FFT spectral multiplier and direct polar
quadrature), all cross-verified against independent oracles.
"""

__version__ = "0.1.0"

from .coherent import (
    expectation_quadrature,
    normalization_factor,
    overlap,
    resolution_check,
)
from .kernel import (
    CPoint,
    addition_formula_residual,
    coeff_identity_C,
    kernel_series,
    reproducing_kernel,
)
from .specfun import (
    PoleError,
    Rational,
    RationalPoly,
    bessel_j,
    binomial_general,
    dimension_hpq,
    disk_polynomial,
    hyp1f1_terminating,
    hyp3f2_terminating,
    jacobi_normalized,
    laguerre,
    laguerre_exact,
    pochhammer,
    script_laguerre,
)
from .suites import run_suite
from .symbols import (
    CoeffTable,
    ConventionReport,
    SpaceParams,
    SymbolRep,
    coeff_table,
    convention_report,
    feldheim_A,
    gamma_coeffs,
    hhat,
    hhat_quadrature_oracle,
    kappa_coeffs,
    linearization_coeffs,
    sigma_coeffs_printed,
    symbol_poly,
)
from .transform import (
    BoundaryMarginError,
    GridFunction2D,
    berezin_direct,
    berezin_spectral,
    h_kernel,
    load_grid,
    save_grid,
    tilde_delta_apply,
)

__all__ = [
    "__version__",
    # specfun
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
    # symbols
    "SpaceParams",
    "SymbolRep",
    "CoeffTable",
    "coeff_table",
    "gamma_coeffs",
    "linearization_coeffs",
    "sigma_coeffs_printed",
    "kappa_coeffs",
    "feldheim_A",
    "symbol_poly",
    "hhat",
    "hhat_quadrature_oracle",
    "ConventionReport",
    "convention_report",
    # kernel
    "CPoint",
    "reproducing_kernel",
    "kernel_series",
    "addition_formula_residual",
    "coeff_identity_C",
    # coherent
    "normalization_factor",
    "overlap",
    "resolution_check",
    "expectation_quadrature",
    # transform
    "GridFunction2D",
    "BoundaryMarginError",
    "h_kernel",
    "berezin_direct",
    "berezin_spectral",
    "tilde_delta_apply",
    "load_grid",
    "save_grid",
    # suites
    "run_suite",
]
