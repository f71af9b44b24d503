"""Special-function layer: float recurrences against the exact oracle,
classical closed forms, and the terminating hypergeometric series."""

import math
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.special import eval_genlaguerre, jv

from berezin.specfun import (
    PoleError,
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


class TestRationalPoly:
    def test_trailing_zeros_stripped(self):
        p = RationalPoly([1, 2, 0, 0])
        assert p.coeffs == (F(1), F(2))
        assert p.degree == 1

    def test_zero_poly(self):
        assert RationalPoly([0, 0]).degree == -1
        assert RationalPoly([]).coeffs == ()

    def test_product_degree_adds(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            a = RationalPoly([F(int(c), 3) for c in rng.integers(-5, 6, 4)] + [1])
            b = RationalPoly([F(int(c), 2) for c in rng.integers(-5, 6, 3)] + [1])
            assert (a * b).degree == a.degree + b.degree

    def test_eval_exact_and_float(self):
        p = RationalPoly([1, -2, F(1, 2)])
        assert p(F(2)) == F(-1)
        assert p(2.0) == pytest.approx(-1.0, abs=1e-15)

    def test_arithmetic(self):
        a = RationalPoly([1, 1])
        assert (a * a - RationalPoly([1, 2, 1])).degree == -1
        assert a - a == RationalPoly.zero()
        assert 2 * a == RationalPoly([2, 2])


class TestLaguerre:
    def test_degree_zero_is_one(self):
        assert laguerre(0, 0.7, 3.3) == 1.0

    def test_value_at_zero(self):
        # L_m^{(n-1)}(0) = C(n+m-1, m); here m=2, n=3
        assert laguerre(2, 2, 0.0) == pytest.approx(6.0, abs=1e-14)

    def test_degree_one_closed_form(self):
        # alpha + 1 - x
        assert laguerre(1, 0, 2.0) == pytest.approx(-1.0, abs=1e-15)

    def test_alpha_domain(self):
        with pytest.raises(ValueError):
            laguerre(2, -1.0, 1.0)

    @pytest.mark.parametrize("alpha", [F(0), F(1), F(2), F(5, 2)])
    def test_recurrence_matches_exact_oracle(self, alpha):
        for k in range(13):
            poly = laguerre_exact(k, alpha)
            for x in (F(0), F(1, 3), F(2), F(17, 4), F(10)):
                exact = poly(x)
                got = laguerre(k, float(alpha), float(x))
                assert got == pytest.approx(float(exact), rel=1e-12, abs=1e-12)

    def test_against_scipy(self):
        xs = np.linspace(0.0, 12.0, 25)
        for k in range(9):
            for alpha in (0.0, 1.0, 2.5):
                ref = eval_genlaguerre(k, alpha, xs)
                got = laguerre(k, alpha, xs)
                assert np.allclose(got, ref, rtol=1e-12, atol=1e-12)


class TestLaguerreExact:
    def test_degree_zero(self):
        assert laguerre_exact(0, F(3, 2)).coeffs == (F(1),)

    def test_degree_one_alpha_zero(self):
        assert laguerre_exact(1, 0).coeffs == (F(1), F(-1))

    def test_degree_two_alpha_zero(self):
        assert laguerre_exact(2, 0).coeffs == (F(1), F(-2), F(1, 2))

    def test_leading_coefficient(self):
        for k in range(1, 8):
            assert laguerre_exact(k, 1).coefficient(k) == F((-1) ** k, math.factorial(k))


class TestScriptLaguerre:
    def test_degree_zero_is_damped_exponential(self):
        for u in (0.0, 1.0, 4.0):
            assert script_laguerre(0, 1.5, u) == pytest.approx(math.exp(-u / 2), rel=1e-15)

    def test_unit_value_at_zero(self):
        for k in range(6):
            for alpha in (0.0, 1.0, 2.5):
                assert script_laguerre(k, alpha, 0.0) == pytest.approx(1.0, rel=1e-14)

    def test_degree_one(self):
        assert script_laguerre(1, 0, 2.0) == pytest.approx(-math.exp(-1.0), rel=1e-14)


class TestJacobiNormalized:
    def test_exactly_one_at_right_endpoint(self):
        rng = np.random.default_rng(5)
        for k in range(13):
            a, b = rng.uniform(-0.9, 3.0, 2)
            assert jacobi_normalized(k, a, b, 1.0) == 1.0

    def test_degree_one_legendre(self):
        for x in (-1.0, -0.25, 0.5, 1.0):
            assert jacobi_normalized(1, 0, 0, x) == pytest.approx(x, abs=1e-15)

    @pytest.mark.parametrize("gamma", [0.0, 1.0, 2.5])
    def test_degree_one_left_endpoint(self, gamma):
        assert jacobi_normalized(1, gamma, 0, -1.0) == pytest.approx(-1 / (gamma + 1), rel=1e-14)

    def test_parameter_domain(self):
        with pytest.raises(ValueError):
            jacobi_normalized(2, -1.0, 0.0, 0.5)


class TestDiskPolynomial:
    def test_value_one_at_one(self):
        for p in range(4):
            for q in range(4):
                assert disk_polynomial(p, q, 0.5, 1.0) == pytest.approx(1.0, rel=1e-14)

    def test_analytic_column(self):
        xi = 0.4 + 0.3j
        for p in range(4):
            assert disk_polynomial(p, 0, 1.0, xi) == pytest.approx(xi**p, rel=1e-14)

    def test_diagonal_degree_one(self):
        for xi in (0.1, 0.5j, 0.4 + 0.3j):
            want = 2 * abs(xi) ** 2 - 1
            assert disk_polynomial(1, 1, 0, xi) == pytest.approx(want, rel=1e-13, abs=1e-13)

    def test_zero_at_origin_off_diagonal(self):
        assert disk_polynomial(3, 1, 0.5, 0.0) == 0.0

    def test_conjugation_symmetry(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            xi = complex(*rng.uniform(-0.7, 0.7, 2))
            p, q = rng.integers(0, 5, 2)
            gamma = rng.uniform(-0.5, 2.0)
            a = disk_polynomial(int(p), int(q), gamma, xi)
            b = disk_polynomial(int(q), int(p), gamma, xi)
            assert a == pytest.approx(b.conjugate(), rel=1e-12, abs=1e-13)

    def test_outside_disk_rejected(self):
        with pytest.raises(ValueError):
            disk_polynomial(1, 1, 0.0, 1.5)


class TestCombinatorics:
    def test_pochhammer(self):
        assert pochhammer(F(7, 3), 0) == 1
        assert pochhammer(2, 3) == 24
        assert pochhammer(F(1, 2), 2) == F(3, 4)

    def test_binomial_general(self):
        assert binomial_general(5, 0) == 1
        assert binomial_general(1, -1) == 0
        assert binomial_general(4, 2) == 6
        assert binomial_general(3, 5) == 0  # above range
        assert binomial_general(-2, 3) == -4  # falling factorial continuation

    def test_dimension_hpq(self):
        assert dimension_hpq(3, 0, 0) == 1
        assert dimension_hpq(2, 1, 1) == 3
        for p in range(6):
            assert dimension_hpq(2, p, 0) == p + 1
        for n in (2, 3, 4):
            for p in range(4):
                for q in range(4):
                    assert dimension_hpq(n, p, q) == dimension_hpq(n, q, p)

    def test_dimension_rejects_n1(self):
        with pytest.raises(ValueError, match="n >= 2"):
            dimension_hpq(1, 1, 1)


class TestBesselJ:
    def test_values_at_zero(self):
        assert bessel_j(0, 0.0) == 1.0
        assert bessel_j(1, 0.0) == 0.0

    def test_against_scipy_on_working_range(self):
        for nu in range(4):
            for x in np.linspace(0.0, 50.0, 41):
                ref = jv(nu, x)
                assert bessel_j(nu, float(x)) == pytest.approx(ref, rel=1e-11, abs=1e-13)

    def test_domain(self):
        with pytest.raises(ValueError):
            bessel_j(0, -1.0)
        with pytest.raises(ValueError):
            bessel_j(-1, 1.0)

    def test_hankel_integral_hits_laguerre_zero(self):
        # quadrature of x^3 e^{-x^2} J_0(2x) over [0, inf) equals
        # (1/2) e^{-1} L_1(1) = 0
        from berezin.quadrature import gauss_laguerre

        u, w = gauss_laguerre(64)
        vals = [0.5 * ui * bessel_j(0, 2 * math.sqrt(ui)) for ui in u]
        assert float(np.dot(w, vals)) == pytest.approx(0.0, abs=1e-12)


class TestHyp1F1:
    def test_single_term(self):
        assert hyp1f1_terminating(0, 2.5, 7.0) == 1.0

    def test_two_terms(self):
        for alpha in (1.0, 2.0, 3.5):
            for u in (0.0, 1.0, 4.0):
                assert hyp1f1_terminating(1, alpha, u) == pytest.approx(1 - u / alpha, rel=1e-14)

    def test_laguerre_relation(self):
        # 1F1(-k; alpha+1; u) = k! Gamma(alpha+1)/Gamma(alpha+k+1) L_k^{(alpha)}(u)
        for k in range(9):
            for alpha in (1, 2, 3):
                pref = math.factorial(k) * math.factorial(alpha) / math.factorial(alpha + k)
                for u in np.linspace(0.0, 10.0, 9):
                    lhs = hyp1f1_terminating(k, alpha + 1, float(u))
                    rhs = pref * laguerre(k, alpha, float(u))
                    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    def test_spot_value(self):
        # both routes give 1/2 at k=1, bottom parameter 2, u=1
        assert hyp1f1_terminating(1, 2, 1.0) == pytest.approx(0.5, abs=1e-15)
        assert 1 * math.factorial(1) / math.factorial(2) * laguerre(1, 1, 1.0) == pytest.approx(
            0.5, abs=1e-15
        )

    def test_pole_bottom_rejected(self):
        with pytest.raises(ValueError, match="non-positive integer"):
            hyp1f1_terminating(3, -1, 1.0)
        with pytest.raises(ValueError):
            hyp1f1_terminating(3, 0, 1.0)
        # alpha = -k itself never divides by zero within the sum
        assert np.isfinite(hyp1f1_terminating(3, -3, 1.0))


class TestHyp3F2:
    def test_top_zero_is_one(self):
        assert hyp3f2_terminating(0, F(1, 2), 3, 2, 2) == 1

    def test_two_term_sum(self):
        assert hyp3f2_terminating(-1, F(1, 2), 3, 2, 2) == F(5, 8)

    def test_pole_error_carries_index(self):
        with pytest.raises(PoleError) as err:
            hyp3f2_terminating(-2, F(1, 2), 3, 0, 2)
        assert err.value.term_index == 1

    def test_nonterminating_rejected(self):
        with pytest.raises(ValueError, match="terminate"):
            hyp3f2_terminating(F(1, 2), F(1, 2), 3, 2, 2)

    def test_early_termination_skips_pole(self):
        # top parameter 0 stops the series before the bottom pole can bite
        assert hyp3f2_terminating(0, -5, 3, 0, 2) == 1
