import math

import pytest
from mock import patch
from scipy import special as sp

from struve_turan import zeros
from struve_turan.exceptions import DomainError
from struve_turan.zeros import (
    inverse_power_tail, max_multiplicity, retained_zeros, struve_h_zero,
    struve_h_zeros, zero_lower_bound, zero_reciprocal_square_sum
)


class TestStruveZeros(object):

    def test_minus_half(self):
        table = struve_h_zeros(-0.5, 5)
        assert table.zeros == tuple(n * math.pi for n in range(1, 6))
        assert table.multiplicity == (1,) * 5
        assert table.bracket[0] == (0.5 * math.pi, 1.5 * math.pi)

    def test_plus_half_double(self):
        table = struve_h_zeros(0.5, 3)
        assert table.zeros[1] == pytest.approx(4.0 * math.pi)
        assert table.multiplicity == (2, 2, 2)
        assert table.bracket[0] == (math.pi, 3.0 * math.pi)

    @pytest.mark.parametrize('nu', [-0.4, 0.0, 0.3])
    def test_roots_interlace_bessel_zeros(self, nu, fresh_zero_caches):
        table = struve_h_zeros(nu, 8)
        bessel = sp.jn_zeros(0, 9) if nu == 0.0 else None
        for n, (h, (lo, hi)) in enumerate(zip(table.zeros, table.bracket)):
            assert lo < h < hi
            assert abs(sp.struve(nu, h)) < 1e-10
            if bessel is not None:
                assert bessel[n] == pytest.approx(lo, rel=1e-12)

    def test_cached_tables_are_prefixes(self, fresh_zero_caches):
        long = struve_h_zeros(0.2, 6).zeros
        assert struve_h_zeros(0.2, 3).zeros == long[:3]

    def test_nth_zero(self):
        assert struve_h_zero(0.5, 2) == pytest.approx(4.0 * math.pi)
        with pytest.raises(DomainError):
            struve_h_zero(0.0, 0)
        with pytest.raises(DomainError):
            struve_h_zero(0.0, 1.5)

    def test_order_outside_real_zero_range(self):
        with pytest.raises(DomainError):
            struve_h_zeros(0.7, 3)
        with pytest.raises(DomainError):
            struve_h_zeros(0.0, 0)

    def test_computed_count_limited(self, few_computed_zeros):
        with pytest.raises(DomainError):
            struve_h_zeros(0.1, few_computed_zeros + 1)
        # closed forms are not limited
        assert len(struve_h_zeros(-0.5, 50).zeros) == 50


class TestEnvelope(object):

    def test_lower_bound_below_zeros(self):
        for nu in (-0.5, 0.0, 0.5):
            table = struve_h_zeros(nu, 10)
            for n, h in enumerate(table.zeros, 1):
                assert zero_lower_bound(n) < h

    def test_tail_bound_dominates(self):
        n = 20
        tail = math.fsum(1.0 / zero_lower_bound(k) ** 2 for k in range(n + 1, 20000))
        assert tail < inverse_power_tail(n, 2)

    def test_multiplicity(self):
        assert max_multiplicity(0.5) == 2
        assert max_multiplicity(0.2) == 1


class TestReciprocalSquareSum(object):

    @pytest.mark.parametrize('nu', [-0.5, 0.0, 0.5])
    def test_brackets_the_exact_sum(self, nu):
        exact = 1.0 / (3.0 * (2.0 * nu + 3.0))
        expansion = zero_reciprocal_square_sum(nu, 30)
        assert expansion.partial < exact <= expansion.partial + expansion.tail_bound

    def test_retained_zeros_capped(self, few_computed_zeros):
        with patch.object(zeros.log, 'warning') as warning:
            table = retained_zeros(0.1, 20)
        assert len(table.zeros) == few_computed_zeros
        assert warning.call_count == 1
