"""Grid transforms: kernel values, file format, both convolution backends,
and the finite-difference eigenvalue operator."""

import math

import numpy as np
import pytest

from berezin.kernel import CPoint, reproducing_kernel
from berezin.quadrature import gauss_laguerre
from berezin.specfun import laguerre
from berezin.symbols import SpaceParams, SymbolRep
from berezin.transform import (
    BoundaryMarginError,
    GridFunction2D,
    berezin_direct,
    berezin_spectral,
    h_kernel,
    load_grid,
    save_grid,
    tilde_delta_apply,
)


class TestHKernel:
    def test_level_zero_gaussian(self):
        for z in (0.0, 0.5 + 0.5j, 2.0):
            want = math.exp(-abs(z) ** 2) / math.pi
            assert h_kernel(SpaceParams(1, 0), z) == pytest.approx(want, rel=1e-15)

    def test_value_at_origin(self):
        for n, m in [(1, 2), (2, 1), (3, 3)]:
            params = SpaceParams(n, m)
            want = (
                float(params.mass_prefactor)
                * math.pi ** (-n)
                * math.comb(m + n - 1, m) ** 2
            )
            assert h_kernel(params, CPoint([0j] * n)) == pytest.approx(want, rel=1e-14)

    def test_radial_unit_mass(self):
        # 2 pi int h_m(rho) rho drho = 1 for n = 1
        u, w = gauss_laguerre(96)
        for m in range(5):
            vals = laguerre(m, 0, u) ** 2 / math.pi
            mass = math.pi * float(np.dot(w, vals))
            assert mass == pytest.approx(1.0, abs=1e-10)

    def test_nonnegative(self):
        rng = np.random.default_rng(0)
        params = SpaceParams(1, 3)
        for _ in range(50):
            assert h_kernel(params, complex(*rng.uniform(-4, 4, 2))) >= 0.0


class TestGridFunction2D:
    def test_shape_and_spacing(self):
        g = GridFunction2D(9, 17, -1, 1, 0, 4, np.zeros((9, 17)))
        assert g.hx == pytest.approx(0.25)
        assert g.hy == pytest.approx(0.25)
        assert g.x[0] == -1 and g.x[-1] == 1

    def test_flat_values_accepted(self):
        g = GridFunction2D(8, 8, 0, 1, 0, 1, np.zeros(64))
        assert g.values.shape == (8, 8)

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            GridFunction2D(4, 8, 0, 1, 0, 1, np.zeros((4, 8)))

    def test_wrong_shape_rejected(self):
        with pytest.raises(ValueError):
            GridFunction2D(8, 8, 0, 1, 0, 1, np.zeros((8, 9)))

    def test_file_round_trip_bit_exact(self, tmp_path):
        rng = np.random.default_rng(1)
        vals = rng.standard_normal((9, 11)) + 1j * rng.standard_normal((9, 11))
        g = GridFunction2D(9, 11, -2, 2, -3, 3, vals)
        path = tmp_path / "field.json"
        save_grid(g, path)
        back = load_grid(path)
        assert back.nx == 9 and back.ny == 11
        assert back.xmin == -2 and back.ymax == 3
        assert np.array_equal(back.values, g.values)  # 17 significant digits round-trip

    def test_load_rejects_missing_key(self, tmp_path):
        (tmp_path / "bad.json").write_text('{"nx": 8, "ny": 8}')
        with pytest.raises(ValueError, match="missing required key"):
            load_grid(tmp_path / "bad.json")

    def test_load_rejects_short_csv(self, tmp_path):
        g = GridFunction2D(8, 8, 0, 1, 0, 1, np.zeros((8, 8)))
        save_grid(g, tmp_path / "g.json")
        (tmp_path / "g.csv").write_text("1.0,0.0\n" * 10)
        with pytest.raises(ValueError, match="rows"):
            load_grid(tmp_path / "g.json")


class TestBerezinDirect:
    def test_constant_fixed_point(self):
        ones = GridFunction2D.from_callable(np.ones_like, 64, 64, -10, 10, -10, 10)
        for m in range(3):
            vals = berezin_direct(ones, m, [0.0, 0.5 + 0.5j, CPoint(1 - 1j)])
            for v in vals:
                assert v == pytest.approx(1.0, abs=1e-8)

    def test_margin_violation_is_typed_and_named(self):
        ones = GridFunction2D.from_callable(np.ones_like, 64, 64, -10, 10, -10, 10)
        with pytest.raises(BoundaryMarginError, match="margin of 6"):
            berezin_direct(ones, 0, [9.0 + 0j])

    def test_positivity_on_nonnegative_field(self):
        rng = np.random.default_rng(2)
        bump = GridFunction2D.from_callable(
            lambda Z: np.exp(-np.abs(Z) ** 2 / 4), 128, 128, -10, 10, -10, 10
        )
        pts = [complex(*rng.uniform(-2, 2, 2)) for _ in range(10)]
        for m in range(3):
            for v in berezin_direct(bump, m, pts):
                assert abs(v.imag) <= 1e-12
                assert v.real >= -1e-12

    def test_plane_wave_heat_eigenvalue(self):
        # level 0, |xi| = 2: convolution multiplies the wave by e^{-1}
        nx = 2048
        wave = GridFunction2D.from_callable(
            lambda Z: np.exp(2j * Z.real), nx, nx, -6.6, 6.6, -6.6, 6.6
        )
        for z in (0.0, 0.3 + 0.25j):
            (got,) = berezin_direct(wave, 0, [z])
            want = math.exp(-1.0) * np.exp(2j * complex(z).real)
            assert abs(got - want) <= 1e-5

    def test_plane_wave_annihilated_at_symbol_zero(self):
        # level 1 multiplier has a double root at |xi| = 2; the leading
        # interpolation error rides the same wave and is annihilated too
        nx = 768
        wave = GridFunction2D.from_callable(
            lambda Z: np.exp(2j * Z.real), nx, nx, -6.6, 6.6, -6.6, 6.6
        )
        (got,) = berezin_direct(wave, 1, [0.2 + 0.1j])
        assert abs(got) <= 1e-5


class TestBerezinSpectral:
    def test_heat_flow_on_gaussian(self):
        g = GridFunction2D.from_callable(
            lambda Z: np.exp(-np.abs(Z) ** 2), 128, 128, -8, 8, -8, 8
        )
        out = berezin_spectral(g, 0)
        X, Y = g.meshgrid()
        ref = np.exp(-(X**2 + Y**2) / 2) / 2
        assert np.max(np.abs(out.values - ref)) <= 1e-6
        assert out.metadata["warnings"] == []

    def test_constant_fixed_point_with_warning(self):
        ones = GridFunction2D.from_callable(np.ones_like, 128, 128, -8, 8, -8, 8)
        for m in range(5):
            out = berezin_spectral(ones, m)
            # a constant cannot decay at the boundary: warn, don't fail
            assert any(w["kind"] == "boundary_decay" for w in out.metadata["warnings"])
            interior = out.values[48:80, 48:80]  # |x|, |y| <= 2
            assert np.max(np.abs(interior - 1.0)) <= 1e-6

    def test_representations_bit_identical(self):
        g = GridFunction2D.from_callable(
            lambda Z: np.exp(-np.abs(Z) ** 2 / 2), 96, 96, -8, 8, -8, 8
        )
        outs = [
            berezin_spectral(g, 2, rep=rep).values
            for rep in (SymbolRep.ORACLE, SymbolRep.KAPPA_FORM, SymbolRep.FACTORED_FORM)
        ]
        assert np.array_equal(outs[0], outs[1])
        assert np.array_equal(outs[0], outs[2])

    def test_wave_packet_suppressed_at_symbol_zero(self):
        # carrier at |xi| = 2 under a wide envelope: the double root crushes
        # the packet to the envelope's spectral width squared
        nx, half, s = 1152, 480.0, 70.0
        packet = GridFunction2D.from_callable(
            lambda Z: np.exp(2j * Z.real) * np.exp(-np.abs(Z) ** 2 / (2 * s * s)),
            nx,
            nx,
            -half,
            half,
            -half,
            half,
        )
        out = berezin_spectral(packet, 1)
        assert out.metadata["warnings"] == []
        ratio = np.max(np.abs(out.values)) / np.max(np.abs(packet.values))
        assert ratio <= 1e-4

    def test_output_grid_congruent(self):
        g = GridFunction2D.from_callable(
            lambda Z: np.exp(-np.abs(Z) ** 2), 64, 96, -8, 8, -9, 9
        )
        out = berezin_spectral(g, 1)
        assert (out.nx, out.ny) == (64, 96)
        assert (out.xmin, out.xmax, out.ymin, out.ymax) == (-8, 8, -9, 9)

    def test_heat_semigroup_composition(self):
        # applying the level-0 transform twice is the half-time heat flow;
        # pins the FFT frequency normalization at two different scales
        g = GridFunction2D.from_callable(
            lambda Z: np.exp(-np.abs(Z) ** 2), 128, 128, -8, 8, -8, 8
        )
        out = berezin_spectral(berezin_spectral(g, 0), 0)
        X, Y = g.meshgrid()
        ref = np.exp(-(X**2 + Y**2) / 3) / 3
        assert np.max(np.abs(out.values - ref)) <= 1e-6


class TestTildeDelta:
    def test_constant_annihilated(self):
        g = GridFunction2D.from_callable(np.ones_like, 32, 32, -1, 1, -1, 1)
        out = tilde_delta_apply(g)
        assert out.metadata["invalid_margin"] == 1
        assert np.all(np.isnan(out.values[0, :].real))
        assert np.max(np.abs(out.values[1:-1, 1:-1])) <= 1e-13

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_antiholomorphic_monomials_are_eigenfunctions(self, q):
        g = GridFunction2D.from_callable(lambda Z: np.conj(Z) ** q, 129, 129, -1, 1, -1, 1)
        out = tilde_delta_apply(g)
        resid = out.values[1:-1, 1:-1] - q * g.values[1:-1, 1:-1]
        h = g.hx
        assert np.max(np.abs(resid)) <= 20 * h * h  # second-order stencils

    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_kernel_sections_are_eigenfunctions_order2(self, m):
        params = SpaceParams(1, m)
        w0 = CPoint(0.3 + 0.2j)

        def field(Z):
            return np.array(
                [[reproducing_kernel(params, CPoint(zc), w0) for zc in row] for row in Z]
            )

        errs = []
        for nx in (65, 129):
            g = GridFunction2D.from_callable(field, nx, nx, -2, 2, -2, 2)
            out = tilde_delta_apply(g)
            resid = out.values[1:-1, 1:-1] - m * g.values[1:-1, 1:-1]
            errs.append(np.max(np.abs(resid)) / np.max(np.abs(g.values)))
        order = math.log2(errs[0] / errs[1])
        assert order >= 1.8
