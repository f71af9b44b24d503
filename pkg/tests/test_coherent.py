"""Coherent-state normalization, overlaps, resolution of identity, and the
lower-symbol quadrature."""

import math

import numpy as np
import pytest

from berezin.coherent import (
    expectation_quadrature,
    normalization_factor,
    overlap,
    resolution_check,
)
from berezin.kernel import CPoint, reproducing_kernel
from berezin.specfun import laguerre
from berezin.symbols import SpaceParams


class TestNormalization:
    def test_n1_independent_of_level(self):
        z = CPoint(0.7 - 0.4j)
        want = math.exp(z.norm_sq()) / math.pi
        for m in range(4):
            assert normalization_factor(SpaceParams(1, m), z) == pytest.approx(want, rel=1e-15)

    def test_value_at_origin(self):
        for n, m in [(1, 0), (2, 3), (3, 2)]:
            got = normalization_factor(SpaceParams(n, m), CPoint([0j] * n))
            assert got == pytest.approx(math.pi ** (-n) * math.comb(n + m - 1, m), rel=1e-15)

    def test_equals_kernel_diagonal(self):
        rng = np.random.default_rng(0)
        for n, m in [(1, 2), (2, 1), (3, 3)]:
            v = rng.uniform(-1, 1, 2 * n)
            z = CPoint.from_reals(v)
            got = normalization_factor(SpaceParams(n, m), z)
            want = reproducing_kernel(SpaceParams(n, m), z, z)
            assert got == pytest.approx(want.real, rel=1e-13)
            assert want.imag == pytest.approx(0.0, abs=1e-13)


class TestOverlap:
    def test_unit_on_diagonal(self):
        for n, m in [(1, 0), (1, 3), (2, 2)]:
            z = CPoint.from_reals(np.arange(1, 2 * n + 1) * 0.2)
            assert overlap(SpaceParams(n, m), z, z) == pytest.approx(1.0, rel=1e-14)

    def test_modulus_bounded_by_one(self):
        rng = np.random.default_rng(1)
        params = SpaceParams(1, 2)
        for _ in range(100):
            z = CPoint(complex(*rng.uniform(-2, 2, 2)))
            w = CPoint(complex(*rng.uniform(-2, 2, 2)))
            assert abs(overlap(params, z, w)) <= 1 + 1e-12

    def test_vanishes_at_laguerre_zero(self):
        # n = 1, m = 1: zero whenever |z - w|^2 = 1
        params = SpaceParams(1, 1)
        z = CPoint(0.3 + 0.4j)
        w = CPoint(0.3 + 0.4j + 1.0)
        assert abs(overlap(params, z, w)) == pytest.approx(0.0, abs=1e-14)

    def test_conjugate_symmetry(self):
        rng = np.random.default_rng(2)
        params = SpaceParams(1, 2)
        for _ in range(20):
            z = CPoint(complex(*rng.uniform(-1.5, 1.5, 2)))
            w = CPoint(complex(*rng.uniform(-1.5, 1.5, 2)))
            assert overlap(params, z, w) == pytest.approx(
                overlap(params, w, z).conjugate(), rel=1e-13, abs=1e-15
            )

    def test_squared_modulus_identity(self):
        # |<z|w>|^2 N(z) N(w) = pi^{-2n} e^{2 Re<z,w>} L_m(|z-w|^2)^2, term by term
        rng = np.random.default_rng(3)
        for n, m in [(1, 1), (1, 3), (2, 2)]:
            params = SpaceParams(n, m)
            for _ in range(10):
                z = CPoint.from_reals(rng.uniform(-1, 1, 2 * n))
                w = CPoint.from_reals(rng.uniform(-1, 1, 2 * n))
                lhs = (
                    abs(overlap(params, z, w)) ** 2
                    * normalization_factor(params, z)
                    * normalization_factor(params, w)
                )
                rhs = (
                    math.pi ** (-2 * n)
                    * math.exp(2 * z.hermitian_inner(w).real)
                    * laguerre(m, n - 1, z.distance_sq(w)) ** 2
                )
                assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_stable_for_large_points(self):
        # the direct N(z)^{1/2} route would overflow near |z|^2 ~ 700
        params = SpaceParams(1, 1)
        z = CPoint(20 + 10j)
        w = CPoint(20.5 + 10j)
        val = overlap(params, z, w)
        assert np.isfinite(val.real) and np.isfinite(val.imag)
        assert abs(val) <= 1 + 1e-12


class TestResolutionCheck:
    def test_gaussian_mass(self):
        assert resolution_check(0, 0.0) == pytest.approx(1.0, abs=1e-8)

    def test_level_one_origin(self):
        assert resolution_check(1, 0.0) == pytest.approx(1.0, abs=1e-6)

    def test_level_two_shifted(self):
        assert resolution_check(2, CPoint(1.0 + 0j)) == pytest.approx(1.0, abs=1e-6)

    def test_levels_up_to_three(self):
        for m in range(4):
            for z in (0.0, 0.5 + 0.5j, 1.5):
                assert resolution_check(m, z) == pytest.approx(1.0, abs=1e-6)

    def test_nonconvergent_radius_reported(self):
        with pytest.raises(ValueError, match="not converged"):
            resolution_check(2, 0.0, quad_radius=2.0)


class TestExpectationQuadrature:
    def test_constant_maps_to_one(self):
        for m in range(4):
            got = expectation_quadrature(m, lambda w: np.ones_like(w), 0.4 + 0.9j)
            assert got == pytest.approx(1.0, abs=1e-10)

    def test_plane_wave_eigenvalue_zero(self):
        # level 1 multiplier vanishes at |xi| = 2
        phi = lambda w: np.exp(1j * 2.0 * w.real)
        got = expectation_quadrature(1, phi, 0.3 - 0.2j)
        assert abs(got) <= 1e-7

    def test_gaussian_moment(self):
        # level 0 adds the quarter-Laplacian of |w|^2, i.e. exactly 1
        for z in (0 + 0j, 1 + 1j, -0.5 + 0.25j):
            got = expectation_quadrature(0, lambda w: np.abs(w) ** 2, z)
            assert got.real == pytest.approx(abs(z) ** 2 + 1, abs=1e-8)
            assert got.imag == pytest.approx(0.0, abs=1e-10)

    def test_plane_wave_general_eigenvalue(self):
        from berezin.symbols import hhat

        xi = (1.2, -0.8)
        phi = lambda w: np.exp(1j * (xi[0] * w.real + xi[1] * w.imag))
        for m in range(3):
            z = 0.4 + 0.1j
            got = expectation_quadrature(m, phi, z)
            want = hhat(SpaceParams(1, m), xi[0] ** 2 + xi[1] ** 2) * complex(
                phi(np.array(z))
            )
            assert got == pytest.approx(want, abs=1e-10)
