import pytest
from mock import patch

from struve_turan import constants
from struve_turan.inequalities import Evaluation, TuranNegativeOrder


class TestBesselTuran(object):

    def test_holds(self):
        from examples.turan import BesselTuran, check

        report = check(BesselTuran(), '0.5:3:0.5', '0.5:20:0.5')
        assert report.theorem_id == 'bessel_turan'
        assert report.violations == []
        assert report.errors == 0

    def test_region(self):
        from examples.turan import BesselTuran, check

        with pytest.raises(BesselTuran.OutsideRegion):
            check(BesselTuran(), '-0.5', '1')


class TestStrictTuran(object):

    def test_holds(self):
        from examples.turan import StrictTuran, check

        report = check(StrictTuran(), '-1.5:-0.5:0.5', '0.5:5:0.5')
        assert report.tolerance == 0.0
        assert report.violations == []

    def test_flags_tiny_margins(self):
        from examples.turan import StrictTuran, check

        tiny = Evaluation(0.0, 1e-15, 1.0, constants.SERIES, 0.0)
        with patch.object(TuranNegativeOrder, 'evaluate', return_value=tiny):
            report = check(StrictTuran(), '-1', '1')
        assert len(report.violations) == 1
