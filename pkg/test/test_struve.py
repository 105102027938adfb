import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mock import patch
from scipy import special as sp

from struve_turan import constants, struve
from struve_turan.exceptions import AccuracyError, DomainError
from struve_turan.struve import (
    inhomogeneous_term, laplace_moment, normalized, ode_residual,
    recurrence_residual, struve_h, struve_h_asymptotic, struve_h_derivative,
    struve_h_integral, struve_h_prime, struve_h_series, struve_k,
    struve_k_asymptotic, struve_k_lower, struve_k_prime, struve_l
)

ORDERS = [-0.7, -0.3, 0.0, 0.5, 1.0, 2.5]


class TestStruveH(object):

    @pytest.mark.parametrize('nu', ORDERS)
    @pytest.mark.parametrize('x', [0.2, 1.0, 4.0, 8.0, 12.0, 30.0, 90.0])
    def test_against_scipy(self, nu, x):
        assert struve_h(nu, x).value == pytest.approx(
            sp.struve(nu, x), rel=1e-8, abs=1e-12
        )

    @pytest.mark.parametrize('nu', [0.0, 1.0, 2.5])
    @pytest.mark.parametrize('x', [150.0, 500.0, 1000.0])
    def test_large_argument(self, nu, x):
        result = struve_h(nu, x)
        assert result.method == constants.VIA_Y_PLUS_K
        assert result.value == pytest.approx(sp.struve(nu, x), rel=1e-7)

    def test_downward_recurrence(self):
        recurrence = struve._h_recurrence(-1.2, 6.0)
        assert recurrence.value == pytest.approx(
            struve_h_series(-1.2, 6.0).value, rel=1e-10
        )

    def test_method_selection(self):
        assert struve_h(0.3, 2.0).method == constants.SERIES
        assert struve_h(0.3, 20.0).method == constants.INTEGRAL
        assert struve_h(-1.5, 20.0).method == constants.CLOSED_FORM
        assert struve_h(-1.2, 20.0).method == constants.RECURRENCE

    @settings(max_examples=50, deadline=None)
    @given(st.floats(min_value=0.15, max_value=30.0))
    def test_closed_forms(self, closed_forms, x):
        for nu, form in closed_forms.values():
            assert struve_h(nu, x).value == pytest.approx(
                form(x), rel=1e-11, abs=1e-13
            )

    @pytest.mark.parametrize('x', [0.5, 3.0, 7.5])
    def test_series_and_integral_agree(self, x):
        for nu in (-0.4, 0.0, 1.5):
            series = struve_h_series(nu, x).value
            integral = struve_h_integral(nu, x).value
            assert series == pytest.approx(integral, rel=1e-10)

    def test_forced_method(self):
        value = struve_h(0.0, 5.0, method=constants.INTEGRAL)
        assert value.method == constants.INTEGRAL
        assert value.value == pytest.approx(sp.struve(0.0, 5.0), rel=1e-10)
        with pytest.raises(DomainError):
            struve_h(0.0, 5.0, method='guess')

    def test_series_cancellation(self):
        with pytest.raises(AccuracyError) as exc:
            struve_h_series(0.0, 60.0)
        assert exc.value.estimate is not None

    def test_series_falls_back(self):
        with patch.object(constants, 'CANCELLATION_LIMIT', new=1.0):
            result = struve_h(0.3, 6.0)
        assert result.method == constants.INTEGRAL

    def test_value_at_zero(self):
        assert struve_h(0.0, 0.0).value == 0.0
        assert struve_h(-1.5, 0.0).value == 0.0
        with pytest.raises(DomainError):
            struve_h(-1.2, 0.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            struve_h(0.0, -1.0)
        with pytest.raises(DomainError):
            struve_h(0.0, constants.X_MAX + 1.0)
        with pytest.raises(DomainError):
            struve_h(float('nan'), 1.0)
        with pytest.raises(DomainError):
            struve_h_integral(-0.5, 1.0)

    def test_asymptotic_needs_positive_argument(self):
        with pytest.raises(DomainError):
            struve_h_asymptotic(0.0, 0.0)


class TestDerivatives(object):

    def test_prime_closed_form(self):
        assert struve_h_prime(-0.5, 0.5 * math.pi).value == pytest.approx(
            -2.0 / math.pi ** 2, rel=1e-12
        )

    @pytest.mark.parametrize('nu', [-0.3, 0.0, 1.0])
    @pytest.mark.parametrize('x', [1.0, 6.0, 15.0])
    def test_derivative_paths_agree(self, nu, x):
        assert struve_h_derivative(nu, x).value == pytest.approx(
            struve_h_prime(nu, x).value, rel=1e-9, abs=1e-12
        )

    @pytest.mark.parametrize('nu, x', [(1.0, 3.0), (0.0, 0.5), (2.5, 7.5)])
    def test_series_derivative(self, nu, x):
        # 2 H'_nu = H_(nu-1) - H_(nu+1) + (x/2)**nu / (sqrt(pi) Gamma(nu + 3/2))
        free = (0.5 * x) ** nu / (math.sqrt(math.pi) * sp.gamma(nu + 1.5))
        expected = 0.5 * (sp.struve(nu - 1.0, x) - sp.struve(nu + 1.0, x) + free)
        result = struve_h_derivative(nu, x)
        assert result.method == constants.SERIES
        assert result.value == pytest.approx(expected, rel=1e-10)

    def test_h0_prime(self):
        # H_0' = 2 / pi - H_1
        x = 2.0
        assert struve_h_prime(0.0, x).value == pytest.approx(
            2.0 / math.pi - sp.struve(1.0, x), rel=1e-12
        )

    def test_needs_positive_argument(self):
        with pytest.raises(DomainError):
            struve_h_prime(0.0, 0.0)
        with pytest.raises(DomainError):
            struve_h_derivative(0.0, 0.0)


class TestStruveL(object):

    @pytest.mark.parametrize('nu', [-1.2, -0.5, 0.0, 1.0, 3.5])
    @pytest.mark.parametrize('x', [0.1, 1.0, 10.0, 35.0])
    def test_against_scipy(self, nu, x):
        assert struve_l(nu, x).value == pytest.approx(
            sp.modstruve(nu, x), rel=1e-9
        )

    def test_closed_form(self):
        x = 2.0
        assert struve_l(-0.5, x).value == pytest.approx(
            math.sqrt(2.0 / (math.pi * x)) * math.sinh(x), rel=1e-14
        )

    def test_range(self):
        with pytest.raises(DomainError):
            struve_l(0.0, constants.L_MAX_X + 1.0)


class TestStruveK(object):

    @pytest.mark.parametrize('nu', [-0.3, 0.0, 0.5, 1.0, 2.5])
    @pytest.mark.parametrize('x', [0.1, 1.0, 5.0, 10.0])
    def test_against_scipy(self, nu, x):
        expected = sp.struve(nu, x) - sp.yv(nu, x)
        assert struve_k(nu, x).value == pytest.approx(expected, rel=1e-8, abs=1e-12)

    @pytest.mark.parametrize('x', [0.3, 2.0, 45.0, 400.0])
    def test_half_order(self, x):
        assert struve_k(0.5, x).value == pytest.approx(
            math.sqrt(2.0 / (math.pi * x)), rel=1e-11
        )

    def test_method_selection(self):
        assert struve_k(0.0, 10.0).method == constants.INTEGRAL
        assert struve_k(0.0, 60.0).method == constants.ASYMPTOTIC

    @pytest.mark.parametrize('nu', [0.3, 1.5])
    def test_cross_check_path(self, nu):
        integral = struve_k(nu, 12.0)
        cross = struve_k(nu, 12.0, method=constants.VIA_H_MINUS_Y)
        assert cross.method == constants.VIA_H_MINUS_Y
        assert cross.value == pytest.approx(integral.value, rel=1e-8)

    def test_asymptotic_diverges_at_small_argument(self):
        with pytest.raises(AccuracyError):
            struve_k_asymptotic(0.3, 0.5)

    def test_lower_order_below_half(self):
        x = 3.0
        expected = sp.struve(-0.7, x) - sp.yv(-0.7, x)
        assert struve_k_lower(0.3, x).value == pytest.approx(expected, rel=1e-8)

    def test_prime_paths_agree(self):
        moment = struve_k_prime(-0.2, 2.0)
        recurrence = struve_k_prime(-0.2, 2.0, method=constants.RECURRENCE)
        assert recurrence.value == pytest.approx(moment.value, rel=1e-9)
        assert moment.value < 0

    def test_domain(self):
        with pytest.raises(DomainError):
            struve_k(-0.5, 1.0)
        with pytest.raises(DomainError):
            struve_k(0.0, 0.0)
        with pytest.raises(DomainError):
            struve_k(0.0, 1.0, method='series')


class TestNormalized(object):

    @pytest.mark.parametrize('nu', [-1.2, -0.5, 0.0, 2.0])
    def test_cal_h_at_origin(self, nu):
        assert normalized((constants.CAL_H, nu), 0.0).value == pytest.approx(1.0)

    def test_default_tolerance(self):
        # calH_(1/2)(x) = 2 (1 - cos x) / x**2
        assert normalized((constants.CAL_H, 0.5), 1.0).value == pytest.approx(
            2.0 * (1.0 - math.cos(1.0)), rel=1e-12
        )
        assert normalized((constants.BB_H, 1.0), 2.0).value == pytest.approx(
            sp.gamma(1.5) * sp.struve(1.0, 2.0), rel=1e-10
        )

    def test_cal_h_even_and_continuous(self):
        kind = (constants.CAL_H, 0.3)
        assert normalized(kind, -3.0).value == normalized(kind, 3.0).value
        below = normalized(kind, constants.SERIES_MAX_X).value
        above = normalized(kind, constants.SERIES_MAX_X + 1e-9).value
        assert above == pytest.approx(below, rel=1e-7)

    def test_cal_h_sine(self):
        x = 2.0
        result = normalized((constants.CAL_H, -0.5), x)
        assert result.value == pytest.approx(math.sin(x) / x, rel=1e-13)

    def test_bb_h_odd(self):
        kind = (constants.BB_H, 0.5)
        assert normalized(kind, -1.5).value == pytest.approx(
            -normalized(kind, 1.5).value
        )

    def test_bb_h_half_order(self):
        x = 2.0
        expected = 2.0 * (1.0 - math.cos(x)) / (math.sqrt(math.pi) * x)
        assert normalized((constants.BB_H, 0.5), x).value == pytest.approx(
            expected, rel=1e-12
        )

    def test_cal_k_half_order(self):
        x = 4.0
        assert normalized((constants.CAL_K, 0.5), x).value == pytest.approx(
            2.0 / (math.sqrt(math.pi) * x), rel=1e-12
        )

    def test_cal_k_matches_k(self):
        nu, x = 1.0, 3.0
        expected = 2.0 ** nu * x ** -nu * sp.gamma(nu + 0.5) * struve_k(nu, x).value
        assert normalized((constants.CAL_K, nu), x).value == pytest.approx(
            expected, rel=1e-12
        )

    def test_laplace_moment_derivative(self):
        # power=1 is minus the x-derivative of calK
        nu, x, h = 0.2, 1.5, 1e-4
        kind = (constants.CAL_K, nu)
        ahead = normalized(kind, x + h).value
        behind = normalized(kind, x - h).value
        slope = (ahead - behind) / (2 * h)
        assert laplace_moment(nu, x, power=1).value == pytest.approx(-slope, rel=1e-6)

    def test_unknown_kind(self):
        with pytest.raises(DomainError):
            normalized(('calJ', 0.0), 1.0)

    def test_domains(self):
        with pytest.raises(DomainError):
            normalized((constants.CAL_H, -1.5), 1.0)
        with pytest.raises(DomainError):
            normalized((constants.BB_H, -0.5), 1.0)
        with pytest.raises(DomainError):
            normalized((constants.CAL_K, 0.0), -1.0)


class TestResiduals(object):

    @pytest.mark.parametrize('nu', [-0.4, 0.0, 0.5, 2.5])
    @pytest.mark.parametrize('x', [0.5, 5.0, 15.0])
    def test_ode(self, nu, x):
        assert ode_residual(nu, x) < 1e-8

    @pytest.mark.parametrize('which', ['rec2', 'rec3', 'rec4'])
    def test_h_recurrences(self, which):
        for nu in (-0.4, 0.0, 1.0):
            for x in (1.0, 10.0):
                assert recurrence_residual(nu, x, which) < 1e-10

    @pytest.mark.parametrize('which', ['rec3', 'rec4'])
    def test_derivative_recurrences_at_small_argument(self, which):
        assert recurrence_residual(1.0, 3.0, which) <= 1e-10

    def test_k_recurrence(self):
        assert recurrence_residual(0.3, 2.0, 'rec1K') < 1e-7

    def test_unknown_recurrence(self):
        with pytest.raises(DomainError):
            recurrence_residual(0.0, 1.0, 'rec9')

    def test_inhomogeneous_term(self):
        assert inhomogeneous_term(0.0, 2.0) == pytest.approx(2.0 / math.pi)


def test_struve_logger_name():
    assert struve.log.name == 'struve_turan.struve'
