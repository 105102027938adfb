import math

import pytest
from scipy import special as sp

from struve_turan import constants
from struve_turan.exceptions import DomainError
from struve_turan.struve import normalized
from struve_turan.turan import (
    INFINITY, ZERO, asymptotic_constant, beta_identity,
    chebyshev_covariance, gamma_ratio_bound, laguerre_margin, laguerre_parts,
    log_convexity_nu, log_convexity_x, turan_delta_h,
    turan_delta_k, turan_delta_l, turan_parts_h, turan_scale
)


def root(x):
    return math.sqrt(2.0 / (math.pi * x))


class TestTuranExpressions(object):

    @pytest.mark.parametrize('x', [0.5, 1.0, 2.5, 6.0])
    def test_h_at_minus_half(self, x):
        here = root(x) * math.sin(x)
        below = -root(x) * (math.sin(x) / x - math.cos(x))
        above = root(x) * (1.0 - math.cos(x))
        result = turan_delta_h(-0.5, x)
        assert result.value == pytest.approx(here ** 2 - below * above, rel=1e-11)

    def test_l_at_minus_half(self):
        x = 1.0
        expected = root(x) ** 2 * (
            math.sinh(x) ** 2
            - (math.cosh(x) - math.sinh(x) / x) * (math.cosh(x) - 1.0)
        )
        result = turan_delta_l(-0.5, x)
        assert result.value == pytest.approx(expected, rel=1e-12)
        assert result.value == pytest.approx(0.75204, abs=1e-5)

    @pytest.mark.parametrize('x', [0.5, 3.0, 20.0])
    def test_k_at_half(self, x):
        # K_(-1/2) vanishes identically
        assert turan_delta_k(0.5, x).value == pytest.approx(
            2.0 / (math.pi * x), rel=1e-10
        )

    def test_error_estimate_and_work(self):
        result = turan_delta_h(0.3, 2.0)
        assert result.est_error > 0
        assert result.work > 0

    def test_scale(self):
        parts = turan_parts_h(-0.5, 2.0)
        assert turan_scale(parts) == max(
            1.0, parts.here.value ** 2, abs(parts.below.value * parts.above.value)
        )

    def test_rejects_nan(self):
        with pytest.raises(DomainError):
            turan_delta_h(float('nan'), 1.0)


class TestLaguerre(object):

    def test_sine_cardinal(self):
        # calH_(-1/2) = sin x / x
        assert laguerre_margin(-0.5, 1, 0.5 * math.pi) == pytest.approx(
            4.0 / math.pi ** 2 - 16.0 / math.pi ** 4, rel=1e-12
        )

    def test_lowest_derivative_is_cal_h(self):
        nu, x = 0.2, 3.0
        parts = laguerre_parts(nu, 1, x)
        assert parts.lower == pytest.approx(
            normalized((constants.CAL_H, nu), x).value, rel=1e-12
        )

    @pytest.mark.parametrize('m', [1, 2, 3, 6])
    def test_nonnegative(self, m):
        for nu in (-0.5, 0.0, 0.5):
            for x in (0.0, 1.0, 7.5, 19.0):
                assert laguerre_margin(nu, m, x) >= -1e-12

    def test_even_in_x(self):
        assert laguerre_margin(0.1, 2, -4.0) == pytest.approx(
            laguerre_margin(0.1, 2, 4.0), rel=1e-14
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            laguerre_margin(0.7, 1, 1.0)
        with pytest.raises(DomainError):
            laguerre_margin(0.0, 0, 1.0)
        with pytest.raises(DomainError):
            laguerre_margin(0.0, constants.LAGUERRE_MAX_ORDER + 1, 1.0)
        with pytest.raises(DomainError):
            laguerre_margin(0.0, 1.5, 1.0)
        with pytest.raises(DomainError):
            laguerre_margin(0.0, 1, constants.LAGUERRE_MAX_X + 1.0)


class TestLogConvexity(object):

    def test_in_x_half_order(self):
        x, delta = 2.0, 0.5
        c = 2.0 / math.sqrt(math.pi)
        expected = c * c * (1.0 / ((x - delta) * (x + delta)) - 1.0 / (x * x))
        parts = log_convexity_x(0.5, x, delta)
        assert parts.product - parts.square == pytest.approx(expected, rel=1e-11)
        assert parts.square == pytest.approx(c * c / (x * x), rel=1e-11)

    @pytest.mark.parametrize('kind, nu, x, delta', [
        (constants.CAL_K, 0.5, 1.0, 0.25),
        (constants.BB_H, 1.5, 2.0, 0.5),
    ])
    def test_in_nu(self, kind, nu, x, delta):
        parts = log_convexity_nu(kind, nu, x, delta)
        assert parts.product > parts.square
        assert parts.square == pytest.approx(
            normalized((kind, nu), x).value ** 2, rel=1e-12
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            log_convexity_x(0.5, 1.0, 1.0)
        with pytest.raises(DomainError):
            log_convexity_nu(constants.CAL_H, 0.5, 1.0, 0.25)
        with pytest.raises(DomainError):
            log_convexity_nu(constants.CAL_K, 0.5, 1.0, 0.0)


class TestGammaRatio(object):

    @pytest.mark.parametrize('nu', [-0.45, -0.25, -0.05])
    def test_closed_form(self, nu):
        assert gamma_ratio_bound(nu) == pytest.approx(
            sp.gamma(-nu) / sp.gamma(0.5 - nu), rel=1e-13
        )

    @pytest.mark.parametrize('nu', [-0.45, -0.25, -0.05])
    def test_beta_identity(self, nu):
        quadrature, closed = beta_identity(nu)
        assert quadrature.method == constants.INTEGRAL
        assert quadrature.value == pytest.approx(closed, rel=1e-10)

    def test_cal_k_approaches_bound(self):
        nu = -0.25
        value = normalized((constants.CAL_K, nu), 1e-6).value
        assert value < gamma_ratio_bound(nu)
        assert value == pytest.approx(gamma_ratio_bound(nu), rel=1e-2)

    def test_domain(self):
        for nu in (-0.5, 0.0, 0.2):
            with pytest.raises(DomainError):
                gamma_ratio_bound(nu)
            with pytest.raises(DomainError):
                beta_identity(nu)


class TestChebyshevCovariance(object):

    def test_signs(self):
        assert chebyshev_covariance(2.0, 1.0) > 0
        assert chebyshev_covariance(1.0, 1.0) < 0

    def test_vanishes_at_three_halves(self):
        assert abs(chebyshev_covariance(1.5, 2.0)) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            chebyshev_covariance(0.5, 1.0)
        with pytest.raises(DomainError):
            chebyshev_covariance(1.0, 0.0)


class TestAsymptoticConstant(object):

    @pytest.mark.parametrize('nu', [-1.0, 0.0, 2.0])
    def test_near_zero(self, nu):
        assert asymptotic_constant(nu, ZERO) == pytest.approx(
            1.0 / (nu + 1.5), rel=1e-4
        )

    def test_near_infinity(self):
        nu = 4.5
        assert asymptotic_constant(nu, INFINITY) == pytest.approx(
            1.0 / (nu + 0.5), rel=5e-3
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            asymptotic_constant(-1.5, ZERO)
        with pytest.raises(DomainError):
            asymptotic_constant(1.0, INFINITY)
        with pytest.raises(DomainError):
            asymptotic_constant(2.0, 'middle')
