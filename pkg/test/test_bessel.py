import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sp

from struve_turan import constants
from struve_turan.bessel import (
    bessel_j, bessel_j_zero, bessel_j_zeros, bessel_y,
    hankel_asymptotic, is_half_integer, mcmahon_zero, rayleigh_sum_j
)
from struve_turan.exceptions import AccuracyError, DomainError


class TestBesselJ(object):

    @pytest.mark.parametrize('nu', [-0.7, -0.25, 0.0, 0.3, 1.0, 2.5, 7.2])
    @pytest.mark.parametrize('x', [0.1, 1.0, 5.0, 12.0, 30.0, 250.0])
    def test_against_scipy(self, nu, x):
        result = bessel_j(nu, x)
        assert result.value == pytest.approx(sp.jv(nu, x), rel=1e-9, abs=1e-12)

    def test_method_switch(self):
        assert bessel_j(0.3, 2.0).method == constants.SERIES
        assert bessel_j(0.3, 12.0).method == constants.INTEGRAL
        assert bessel_j(0.3, 50.0).method == constants.ASYMPTOTIC
        assert bessel_j(1.5, 12.0).method == constants.CLOSED_FORM

    def test_half_integer_closed_form(self):
        x = 3.0
        expected = math.sqrt(2.0 / (math.pi * x)) * (math.sin(x) / x - math.cos(x))
        assert bessel_j(1.5, x).value == pytest.approx(expected, rel=1e-14)

    def test_at_zero(self):
        assert bessel_j(0.0, 0.0).value == 1.0
        assert bessel_j(0.5, 0.0).value == 0.0
        with pytest.raises(DomainError):
            bessel_j(-0.5, 0.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            bessel_j(-1.0, 1.0)
        with pytest.raises(DomainError):
            bessel_j(0.0, -1.0)
        with pytest.raises(DomainError):
            bessel_j(0.0, 2 * constants.X_MAX)


class TestBesselY(object):

    @pytest.mark.parametrize('nu', [-0.7, 0.3, 2.5])
    @pytest.mark.parametrize('x', [0.5, 3.0, 15.0, 40.0])
    def test_against_scipy(self, nu, x):
        result = bessel_y(nu, x)
        assert result.value == pytest.approx(sp.yv(nu, x), rel=1e-9, abs=1e-12)

    @pytest.mark.parametrize('nu', [0.0, 1.0, -2.0])
    def test_integer_order(self, nu):
        result = bessel_y(nu, 2.0)
        assert result.value == pytest.approx(sp.yv(nu, 2.0), rel=1e-7)

    def test_needs_positive_argument(self):
        with pytest.raises(DomainError):
            bessel_y(0.5, 0.0)


class TestHankel(object):

    def test_terminates_at_half_integer(self):
        sums = hankel_asymptotic(0.5, 3.0)
        assert sums.p == 1.0
        assert sums.q == 0.0

    def test_diverges_at_small_argument(self):
        with pytest.raises(AccuracyError):
            hankel_asymptotic(0.3, 0.5)


class TestZeros(object):

    def test_integer_order(self, fresh_zero_caches):
        table = bessel_j_zeros(0.0, 20)
        assert table.count == 20
        expected = list(sp.jn_zeros(0, 20))
        assert list(table.zeros) == pytest.approx(expected, rel=1e-12)

    def test_half_integer(self):
        zeros = bessel_j_zeros(0.5, 10).zeros
        expected = [n * math.pi for n in range(1, 11)]
        assert list(zeros) == pytest.approx(expected, rel=1e-12)

    def test_cache_prefix(self, fresh_zero_caches):
        long = bessel_j_zeros(0.2, 12).zeros
        short = bessel_j_zeros(0.2, 4).zeros
        assert short == long[:4]

    @settings(max_examples=20, deadline=None)
    @given(st.floats(min_value=-0.9, max_value=5.0))
    def test_zeros_are_roots(self, nu):
        for zero in bessel_j_zeros(nu, 3).zeros:
            assert abs(sp.jv(nu, zero)) < 1e-10

    def test_first_zero_bound(self):
        for nu in (0.0, 0.5, 1.0, 3.0):
            assert bessel_j_zero(nu, 1) ** 2 > 4.0 * (nu + 1.0)

    def test_mcmahon_close_for_large_n(self):
        assert mcmahon_zero(0.0, 30) == pytest.approx(bessel_j_zero(0.0, 30), abs=1e-7)

    def test_bad_index(self):
        with pytest.raises(DomainError):
            bessel_j_zero(0.0, 0)
        with pytest.raises(DomainError):
            bessel_j_zeros(-1.5, 3)


def test_rayleigh_sum():
    assert rayleigh_sum_j(0.0) == 0.25
    zeros = bessel_j_zeros(1.0, 200).zeros
    partial = math.fsum(1.0 / (j * j) for j in zeros)
    assert partial < rayleigh_sum_j(1.0) < partial + 1e-3


def test_is_half_integer():
    assert is_half_integer(-1.5)
    assert not is_half_integer(1.0)
