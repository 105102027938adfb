import csv
import io
import json
import math

import pytest
from mock import patch

from struve_turan import cli, constants, selftest
from struve_turan.cli import (
    EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, attach_grid_values,
    format_value, main, write_records
)
from struve_turan.exceptions import AccuracyError
from struve_turan.inequalities import Evaluation, TuranNegativeOrder


def run(*argv):
    stream = io.StringIO()
    code = main(list(argv), stream)
    return code, stream.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestEval(object):

    def test_csv(self):
        code, out = run('eval', '--fn', 'H', '--nu', '-0.5', '--x', '1')
        assert code == EXIT_OK
        assert out.splitlines()[0] == "fn,nu,x,value,method,est_error"
        record, = rows(out)
        assert float(record['value']) == pytest.approx(
            math.sqrt(2.0 / math.pi) * math.sin(1.0), rel=1e-12
        )

    def test_json(self):
        code, out = run(
            'eval', '--fn', 'K', '--nu', '0.5', '--x', '2', '--out', 'json'
        )
        assert code == EXIT_OK
        record, = json.loads(out)
        assert record['fn'] == 'K'
        assert record['value'] == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-10)

    def test_method(self):
        code, out = run(
            'eval', '--fn', 'H', '--nu', '0.3', '--x', '2', '--method', 'integral'
        )
        assert code == EXIT_OK
        assert rows(out)[0]['method'] == constants.INTEGRAL

    def test_product(self):
        code, out = run(
            'eval', '--fn', 'calH', '--nu', '-0.5', '--x', '1', '--method', 'product'
        )
        assert code == EXIT_OK
        record, = rows(out)
        assert record['method'] == constants.PRODUCT
        assert float(record['value']) == pytest.approx(math.sin(1.0), rel=1e-8)

    def test_method_not_available(self):
        code, _ = run(
            'eval', '--fn', 'L', '--nu', '0', '--x', '1', '--method', 'series'
        )
        assert code == EXIT_NUMERICAL

    def test_domain_error(self, capsys):
        code, out = run('eval', '--fn', 'K', '--nu', '-1', '--x', '1')
        assert code == EXIT_NUMERICAL
        assert out == ""
        assert capsys.readouterr().err.startswith("error: ")


class TestZeros(object):

    def test_struve(self):
        code, out = run('zeros', '--fn', 'H', '--nu', '-0.5', '--count', '3')
        assert code == EXIT_OK
        table = rows(out)
        assert [int(record['n']) for record in table] == [1, 2, 3]
        assert float(table[2]['zero']) == pytest.approx(3.0 * math.pi)
        assert table[0]['multiplicity'] == '1'

    def test_bessel(self):
        code, out = run('zeros', '--fn', 'J', '--nu', '0.5', '--count', '2')
        assert code == EXIT_OK
        first, second = rows(out)
        assert float(second['zero']) == pytest.approx(2.0 * math.pi)
        assert first['bracket_lo'] == ''

    @pytest.mark.parametrize('count', ['0', '101', 'many'])
    def test_count_checked(self, count):
        with pytest.raises(SystemExit) as exc:
            run('zeros', '--fn', 'H', '--nu', '0', '--count', count)
        assert exc.value.code == EXIT_USAGE


class TestVerify(object):

    ARGS = ('--theorem', 'T1a', '--nu-grid', '-1.5:-0.5:0.5', '--x-grid', '0:2:1')

    def test_negative_ranges(self):
        code, out = run(
            'verify', '--theorem', 'T2e_R1', '--nu-grid', '-0.45:-0.05:0.05',
            '--x-grid', '0.1:20:0.1'
        )
        assert code == EXIT_OK
        statuses = {record['status'] for record in rows(out)}
        assert constants.OK in statuses
        assert statuses <= {constants.OK, constants.EXCLUDED}

    def test_equals_form(self):
        code, _ = run(
            'verify', '--theorem', 'T1a', '--nu-grid=-1:-0.5:0.5', '--x-grid=1'
        )
        assert code == EXIT_OK

    def test_outside_stated_orders(self):
        code, out = run(
            'verify', '--theorem', 'T1a', '--nu-grid', '0:1:0.1',
            '--x-grid', '0.1:5:0.1'
        )
        assert code == EXIT_NUMERICAL
        assert out == ""

    def test_missing_y_grid(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run('verify', '--theorem', 'T2f_R2', '--nu-grid', '-0.25', '--x-grid', '1')
        assert exc.value.code == EXIT_USAGE
        assert "needs --y-grid" in capsys.readouterr().err

    def test_holds(self, capsys):
        code, out = run('verify', *self.ARGS)
        assert code == EXIT_OK
        table = rows(out)
        assert list(table[0]) == list(cli.ROW_FIELDS)
        assert [record['status'] for record in table].count(constants.EXCLUDED) == 3
        assert "T1a: min_margin=" in capsys.readouterr().err

    def test_violation(self):
        negative = Evaluation(0.0, 1.0, 1.0, constants.SERIES, 0.0)
        with patch.object(TuranNegativeOrder, 'evaluate', return_value=negative):
            code, _ = run('verify', *self.ARGS)
        assert code == EXIT_VIOLATION

    def test_errors(self):
        with patch.object(
            TuranNegativeOrder, 'evaluate', side_effect=AccuracyError("no")
        ):
            code, _ = run('verify', *self.ARGS)
        assert code == EXIT_NUMERICAL

    def test_outside_region(self):
        code, out = run(
            'verify', '--theorem', 'T1a', '--nu-grid', '0', '--x-grid', '1'
        )
        assert code == EXIT_NUMERICAL
        assert out == ""

    def test_orders_and_json(self):
        code, out = run(
            'verify', '--theorem', 'T2a_cm', '--nu-grid', '0', '--x-grid', '1',
            '--orders', '1,3', '--out', 'json'
        )
        assert code == EXIT_OK
        assert [record['order'] for record in json.loads(out)] == [1, 3]

    @pytest.mark.parametrize('argv', [
        ('verify', '--theorem', 'T1a', '--nu-grid', '0:1', '--x-grid', '1'),
        ('verify', '--theorem', 'T9', '--nu-grid', '0', '--x-grid', '1'),
        ('verify', '--theorem', 'T2a_cm', '--nu-grid', '0', '--x-grid', '1',
         '--orders', 'a,b'),
        ('verify',),
        (),
    ])
    def test_usage(self, argv):
        with pytest.raises(SystemExit) as exc:
            run(*argv)
        assert exc.value.code == EXIT_USAGE


class TestScan(object):

    def test_records_failures(self):
        code, out = run(
            'scan', '--theorem', 'T2b_T1', '--nu-grid', '-1', '--x-grid', '1'
        )
        assert code == EXIT_OK
        assert rows(out)[0]['status'] == constants.ERROR

    def test_negative_order(self):
        code, out = run(
            'scan', '--theorem', 'BOUND_quotient', '--nu-grid', '-0.5:-0.5:1',
            '--x-grid', '0.1:3:0.1'
        )
        assert code == EXIT_OK
        assert {record['nu'] for record in rows(out)} == {'-0.5'}

    def test_missing_y_grid(self):
        with pytest.raises(SystemExit) as exc:
            run('scan', '--theorem', 'LC_calK_x', '--nu-grid', '0', '--x-grid', '1')
        assert exc.value.code == EXIT_USAGE


class TestAttachGridValues(object):

    def test_joins_grid_values(self):
        argv = [
            'verify', '--theorem', 'T1a', '--nu-grid', '-1:-0.5:0.5',
            '--x-grid', '1', '--y-grid', '-0.5'
        ]
        assert attach_grid_values(argv) == [
            'verify', '--theorem', 'T1a', '--nu-grid=-1:-0.5:0.5',
            '--x-grid=1', '--y-grid=-0.5'
        ]

    def test_leaves_other_arguments(self):
        argv = ['eval', '--fn', 'H', '--nu', '-0.5', '--x', '1']
        assert attach_grid_values(argv) == argv

    def test_trailing_option(self):
        assert attach_grid_values(['verify', '--nu-grid']) == ['verify', '--nu-grid']


class TestSelftest(object):

    def test_suite(self):
        code, out = run('selftest', '--suite', 'gamma')
        assert code == EXIT_OK
        assert out.startswith("gamma: pass")

    def test_failure(self):
        def broken():
            return [selftest.Check("off", 1.0, 0.0)]

        with patch.dict(selftest.SUITES, {'gamma': broken}):
            code, out = run('selftest', '--suite', 'gamma')
        assert code == EXIT_VIOLATION
        assert out == "gamma: FAIL (1 of 1 checks)\n"


class TestFormatting(object):

    def test_format_value(self):
        assert format_value(None) == ''
        assert format_value(0.1) == '0.10000000000000001'
        assert format_value(3) == '3'
        assert format_value('ok') == 'ok'

    def test_json_non_finite(self):
        stream = io.StringIO()
        write_records([{'a': float('nan'), 'b': None}], ('a', 'b'), 'json', stream)
        assert json.loads(stream.getvalue()) == [{'a': None, 'b': None}]

    def test_csv_line_endings(self):
        stream = io.StringIO()
        write_records([{'a': 1.5}], ('a',), 'csv', stream)
        assert stream.getvalue() == "a\r\n1.5\r\n"
