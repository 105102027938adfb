"""
Command line interface.

Exit codes: 0 success, 1 an inequality is violated or a selftest suite
fails, 2 usage error, 3 numerical or domain error.
"""
import argparse
import collections
import csv
import json
import logging
import math
import sys

from . import constants
from .bessel import bessel_j, bessel_j_zeros, bessel_y
from .exceptions import DomainError, StruveError
from .expansions import hadamard_product_eval, j_series_h
from .grid import make_grid, parse_range
from .inequalities import INEQUALITIES, THEOREM_IDS, scan_region, verify
from .results import EvalResult
from .selftest import SUITES, run
from .special import rgamma
from .struve import normalized, struve_h, struve_k, struve_l
from .zeros import struve_h_zeros

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

MAX_ZERO_COUNT = 100

AUTO = 'auto'
METHODS = {
    AUTO: None,
    'series': constants.SERIES,
    'integral': constants.INTEGRAL,
    'product': constants.PRODUCT,
    'jseries': constants.J_SERIES,
    'asymptotic': constants.ASYMPTOTIC,
    'closed_form': constants.CLOSED_FORM,
    'recurrence': constants.RECURRENCE,
    'via_y_plus_k': constants.VIA_Y_PLUS_K,
    'via_h_minus_y': constants.VIA_H_MINUS_Y,
}

ROW_FIELDS = (
    'nu', 'x', 'y', 'order', 'lhs', 'rhs', 'margin', 'status', 'method',
    'est_error'
)


def format_value(value):
    if value is None:
        return ''
    if isinstance(value, float):
        return format(value, '.17g')
    return str(value)


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def write_records(records, fields, out, stream):
    """ Write flat records as CSV with a header row or as a JSON array.
    """
    if out == 'json':
        json.dump(
            [
                collections.OrderedDict(
                    (field, _json_value(record[field])) for field in fields
                )
                for record in records
            ],
            stream, indent=2
        )
        stream.write("\n")
        return
    writer = csv.writer(stream, lineterminator='\r\n')
    writer.writerow(fields)
    for record in records:
        writer.writerow([format_value(record[field]) for field in fields])


def _from_cal_h(nu, x, result):
    # H_nu = 2 (x/2)**(nu+1) calH_nu / (sqrt(pi) Gamma(nu + 3/2))
    if x < 0:
        raise DomainError("H needs x >= 0, got {!r}".format(x))
    scale = 2.0 * (0.5 * x) ** (nu + 1.0) * rgamma(nu + 1.5) / constants.SQRT_PI
    return result._replace(
        value=scale * result.value, est_error=abs(scale) * result.est_error
    )


def _product(nu, x):
    expansion = hadamard_product_eval(nu, x, constants.PRODUCT_TERMS)
    if expansion.corrected is None:
        raise DomainError(
            "the product has no error bound at x={!r}".format(x)
        )
    return EvalResult(
        expansion.corrected, constants.PRODUCT, expansion.corrected_bound,
        expansion.n_terms
    )


def evaluate(fn, nu, x, method=None, tol=None):
    """ Evaluate one of ``constants.FUNCTIONS`` with an optional method.
    """
    if method == constants.PRODUCT and fn in ('H', constants.CAL_H):
        result = _product(nu, x)
        return _from_cal_h(nu, x, result) if fn == 'H' else result
    if method == constants.J_SERIES and fn == 'H':
        expansion = j_series_h(nu, x, constants.J_SERIES_TERMS)
        return EvalResult(
            expansion.partial, constants.J_SERIES, expansion.tail_bound,
            expansion.n_terms
        )
    if fn == 'H':
        return struve_h(nu, x, method=method, tol=tol)
    if fn == 'K':
        return struve_k(nu, x, tol=tol, method=method)
    if method is not None:
        raise DomainError("method {!r} is not available for {}".format(method, fn))
    if fn == 'L':
        return struve_l(nu, x, tol)
    if fn == 'J':
        return bessel_j(nu, x, tol)
    if fn == 'Y':
        return bessel_y(nu, x, tol)
    return normalized((fn, nu), x, tol)


def cmd_eval(args, stream):
    result = evaluate(args.fn, args.nu, args.x, METHODS[args.method], args.tol)
    record = {
        'fn': args.fn, 'nu': args.nu, 'x': args.x, 'value': result.value,
        'method': result.method, 'est_error': result.est_error,
    }
    write_records(
        [record], ('fn', 'nu', 'x', 'value', 'method', 'est_error'), args.out,
        stream
    )
    return EXIT_OK


def cmd_zeros(args, stream):
    records = []
    if args.fn == 'H':
        table = struve_h_zeros(args.nu, args.count)
        for n, (zero, multiplicity, bracket) in enumerate(
                zip(table.zeros, table.multiplicity, table.bracket), 1):
            records.append({
                'n': n, 'zero': zero, 'multiplicity': multiplicity,
                'bracket_lo': bracket[0], 'bracket_hi': bracket[1],
            })
    else:
        table = bessel_j_zeros(args.nu, args.count)
        for n, zero in enumerate(table.zeros, 1):
            records.append({
                'n': n, 'zero': zero, 'multiplicity': 1,
                'bracket_lo': None, 'bracket_hi': None,
            })
    write_records(
        records, ('n', 'zero', 'multiplicity', 'bracket_lo', 'bracket_hi'),
        args.out, stream
    )
    return EXIT_OK


def _orders(text):
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "orders must be comma separated integers, got {!r}".format(text)
        )


def _report(args, stream, guarded):
    grid = make_grid(
        args.nu_grid, args.x_grid, args.exclusion, args.y_grid
    )
    check = verify if guarded else scan_region
    report = check(args.theorem, grid, args.tolerance, args.orders)
    write_records(
        [row._asdict() for row in report.rows], ROW_FIELDS, args.out, stream
    )
    sys.stderr.write(
        "{}: min_margin={} argmin={} n_violations={} n_errors={}\n".format(
            report.theorem_id, format_value(report.min_margin),
            report.argmin, len(report.violations), report.errors)
    )
    return report


def cmd_verify(args, stream):
    report = _report(args, stream, guarded=True)
    if report.violations:
        return EXIT_VIOLATION
    if report.errors:
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_scan(args, stream):
    _report(args, stream, guarded=False)
    return EXIT_OK


def cmd_selftest(args, stream):
    results = run(args.suite)
    for result in results:
        if result.passed:
            stream.write("{}: pass ({} checks)\n".format(result.suite, result.checks))
        else:
            stream.write("{}: FAIL ({} of {} checks)\n".format(
                result.suite, len(result.failures), result.checks))
    if all(result.passed for result in results):
        return EXIT_OK
    return EXIT_VIOLATION


def _count(text):
    count = int(text)
    if not 1 <= count <= MAX_ZERO_COUNT:
        raise argparse.ArgumentTypeError(
            "count must lie in 1..{}, got {}".format(MAX_ZERO_COUNT, count)
        )
    return count


def _add_grid_arguments(parser):
    parser.add_argument('--theorem', required=True, choices=THEOREM_IDS)
    parser.add_argument(
        '--nu-grid', required=True, type=parse_range, help="lo:hi:step"
    )
    parser.add_argument(
        '--x-grid', required=True, type=parse_range, help="lo:hi:step"
    )
    parser.add_argument(
        '--y-grid', type=parse_range, help="lo:hi:step, for two-argument checks"
    )
    parser.add_argument(
        '--tolerance', type=float,
        help="scaled margin below which a point is a violation "
             "(default: per inequality, mostly 1e-9)"
    )
    parser.add_argument(
        '--exclusion', type=float, default=constants.GRID_EXCLUSION,
        help="exclusion radius around x = 0 and around poles"
    )
    parser.add_argument(
        '--orders', type=_orders,
        help="comma separated derivative orders for the cm and Laguerre checks"
    )


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true')
    common.add_argument('--out', choices=('csv', 'json'), default='csv')

    parser = argparse.ArgumentParser(
        prog='struve-turan',
        description="Struve function evaluation and Turan-type inequality checks"
    )
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    evaluation = commands.add_parser(
        'eval', parents=[common], help="evaluate one function"
    )
    evaluation.add_argument('--fn', required=True, choices=constants.FUNCTIONS)
    evaluation.add_argument('--nu', required=True, type=float)
    evaluation.add_argument('--x', required=True, type=float)
    evaluation.add_argument('--method', choices=tuple(METHODS), default=AUTO)
    evaluation.add_argument('--tol', type=float, default=1e-10)
    evaluation.set_defaults(handler=cmd_eval)

    zeros = commands.add_parser(
        'zeros', parents=[common], help="table of positive zeros"
    )
    zeros.add_argument('--fn', required=True, choices=('H', 'J'))
    zeros.add_argument('--nu', required=True, type=float)
    zeros.add_argument('--count', required=True, type=_count)
    zeros.set_defaults(handler=cmd_zeros)

    verification = commands.add_parser(
        'verify', parents=[common],
        help="check an inequality inside its stated region"
    )
    _add_grid_arguments(verification)
    verification.set_defaults(handler=cmd_verify)

    scan = commands.add_parser(
        'scan', parents=[common], help="evaluate an inequality anywhere"
    )
    _add_grid_arguments(scan)
    scan.set_defaults(handler=cmd_scan)

    selftest = commands.add_parser(
        'selftest', parents=[common], help="run the self-checks"
    )
    selftest.add_argument(
        '--suite', action='append', choices=tuple(SUITES),
        help="run only this suite; may be repeated"
    )
    selftest.set_defaults(handler=cmd_selftest)
    return parser


GRID_OPTIONS = ('--nu-grid', '--x-grid', '--y-grid')


def attach_grid_values(argv):
    """ Join ``--nu-grid VALUE`` into ``--nu-grid=VALUE``; argparse reads a
    negative range such as ``-0.45:-0.05:0.05`` as an option string.
    """
    joined = []
    arguments = iter(argv)
    for argument in arguments:
        if argument in GRID_OPTIONS:
            value = next(arguments, None)
            if value is not None:
                argument = "{}={}".format(argument, value)
        joined.append(argument)
    return joined


def main(argv=None, stream=None):
    stream = sys.stdout if stream is None else stream
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(attach_grid_values(argv))
    theorem = getattr(args, 'theorem', None)
    if (
        theorem is not None and INEQUALITIES[theorem].two_argument
        and args.y_grid is None
    ):
        parser.error("{} compares two arguments and needs --y-grid".format(theorem))
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        return args.handler(args, stream)
    except StruveError as exc:
        sys.stderr.write("error: {}\n".format(exc))
        return EXIT_NUMERICAL


if __name__ == '__main__':
    sys.exit(main())
