"""Shared quadrature plumbing: cached Gauss-Laguerre rules and the polar
sampling scheme used by every radial Gaussian integral in the package.

All integrals here have the shape

    int_{R^2} f(|w - z0|^2) g(w) dmu(w)
        = (1/2) int_0^inf int_0^{2pi} f(u) g(z0 + sqrt(u) e^{i theta}) du dtheta,

with f carrying an e^{-u} factor: Gauss-Laguerre in the squared radius u
(the weight absorbs the Gaussian; the angular average of a smooth g is an
analytic function of u) and the trapezoid rule in the angle (spectrally
accurate on the periodic circle).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import roots_laguerre


@lru_cache(maxsize=None)
def gauss_laguerre(n: int):
    """Nodes and weights for the weight e^{-u} on [0, inf).

    Cached and shared; callers must treat the returned arrays as read-only.
    """
    x, w = roots_laguerre(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=None)
def angular_nodes(n: int):
    """Equispaced angles for the trapezoid rule on [0, 2pi)."""
    theta = np.arange(n) * (2.0 * np.pi / n)
    theta.setflags(write=False)
    return theta


def polar_samples(center: complex, radial_nodes: int, angular_nodes_count: int):
    """Sample points z0 + sqrt(u_i) e^{i theta_j} for the polar rule.

    Returns (u, w, pts) with pts of shape (radial, angular).  A function
    whose radial factor is e^{-u} h(u) integrates against dmu as
    sum_i w_i h(u_i) * mean_j g(pts[i, j]) * pi ... the caller owns the
    constant bookkeeping; this helper only builds the geometry.
    """
    u, w = gauss_laguerre(radial_nodes)
    theta = angular_nodes(angular_nodes_count)
    pts = center + np.sqrt(u)[:, None] * np.exp(1j * theta)[None, :]
    return u, w, pts
