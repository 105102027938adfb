"""
Self-checks run by ``struve-turan selftest``: closed forms, agreement of
independent representations, differential equation and recurrence
residuals, zero tables and the Euler-Rayleigh sums.
"""
import collections
import logging
import math

import numpy as np

from . import constants
from .bessel import bessel_j_zeros, rayleigh_sum_j
from .exceptions import StruveError
from .expansions import euler_rayleigh_sums, j_series_h
from .quadrature import poisson_integral
from .special import beta, gamma, rgamma
from .struve import (
    ode_residual, recurrence_residual, struve_h, struve_h_integral,
    struve_h_series, struve_k, struve_l
)
from .zeros import inverse_power_tail, struve_h_zeros, zero_reciprocal_square_sum

log = logging.getLogger(__name__)

Check = collections.namedtuple('Check', ['name', 'error', 'limit'])

SuiteResult = collections.namedtuple(
    'SuiteResult', ['suite', 'passed', 'checks', 'failures']
)

CROSS_ORDERS = (-0.4, 0.0, 0.5, 1.0, 2.5)
CROSS_POINTS = (0.5, 1.0, 2.0, 5.0, 10.0, 15.0)
ZERO_ORDERS = (-0.5, -0.25, 0.0, 0.25, 0.5)
INTERLACING_ORDERS = (-0.4, -0.2, 0.0, 0.2, 0.4)


def _relative(value, reference):
    return abs(value - reference) / max(1.0, abs(reference))


def gamma_suite():
    known = (
        (0.5, 1.7724538509055160273),
        (0.25, 3.6256099082219083119),
        (5.0, 24.0),
        (-1.5, 2.3632718012073547031),
        (10.5, 1133278.3889487855673),
    )
    checks = [
        Check("gamma({!r})".format(a), abs(gamma(a) - value) / value, 1e-13)
        for a, value in known
    ]
    checks.append(Check("rgamma(-3)", abs(rgamma(-3.0)), 0.0))
    z = 0.3
    checks.append(Check(
        "reflection at {!r}".format(z),
        _relative(gamma(z) * gamma(1.0 - z), math.pi / math.sin(math.pi * z)),
        1e-13
    ))
    checks.append(Check(
        "beta(1/4, 3/4)", _relative(beta(0.25, 0.75), math.pi * math.sqrt(2.0)),
        1e-13
    ))
    return checks


def _closed_forms(x):
    root = math.sqrt(2.0 / (math.pi * x))
    return (
        ("H_-1/2", struve_h(-0.5, x).value, root * math.sin(x)),
        ("H_1/2", struve_h(0.5, x).value, root * (1.0 - math.cos(x))),
        ("K_1/2", struve_k(0.5, x).value, root),
        ("L_-1/2", struve_l(-0.5, x).value, root * math.sinh(x)),
    )


def closed_form_suite():
    checks = []
    for x in np.linspace(0.15, 30.0, 200):
        for name, value, reference in _closed_forms(float(x)):
            checks.append(Check(
                "{}({:.4g})".format(name, x), _relative(value, reference), 1e-11
            ))
    return checks


def cross_representation_suite():
    checks = []
    for nu in CROSS_ORDERS:
        for x in CROSS_POINTS:
            series = struve_h_series(nu, x).value
            integral = struve_h_integral(nu, x).value
            expansion = j_series_h(nu, x, constants.J_SERIES_TERMS).partial
            label = "H_{!r}({!r})".format(nu, x)
            scale = max(abs(integral), 1e-300)
            checks.append(Check(
                label + " series/integral", abs(series - integral) / scale, 1e-8
            ))
            checks.append(Check(
                label + " j-series/integral", abs(expansion - integral) / scale, 1e-8
            ))
    return checks


def ode_suite():
    return [
        Check("ode nu={!r} x={!r}".format(nu, x), ode_residual(nu, x), 1e-8)
        for nu in CROSS_ORDERS for x in CROSS_POINTS
    ]


def recurrence_suite():
    limits = (('rec2', 1e-10), ('rec3', 1e-10), ('rec4', 1e-10), ('rec1K', 1e-7))
    return [
        Check(
            "{} nu={!r} x={!r}".format(which, nu, x),
            recurrence_residual(nu, x, which), limit
        )
        for which, limit in limits for nu in CROSS_ORDERS for x in CROSS_POINTS
    ]


def integral_identity_suite():
    """
    ``x H_nu / (2 nu + 1) - H_(nu+1)`` against its integral
    ``2 (x/2)**(nu+1) / (sqrt(pi) Gamma(nu + 3/2)) int t**2 (1 - t**2)**(nu-1/2)
    sin(x t) dt``, which is nonnegative on [0, pi].
    """
    checks = []
    for nu in (0.0, 0.5, 1.0, 2.5):
        for x in (0.5, 1.0, 2.0, 3.0):
            here = struve_h(nu, x).value
            lhs = x * here / (2.0 * nu + 1.0) - struve_h(nu + 1.0, x).value
            integral = poisson_integral(nu, x, np.sin, power=2)
            rhs = (
                2.0 * (0.5 * x) ** (nu + 1.0) * rgamma(nu + 1.5)
                / constants.SQRT_PI * integral.value
            )
            label = "identity nu={!r} x={!r}".format(nu, x)
            checks.append(Check(label, _relative(lhs, rhs), 1e-10))
            checks.append(Check(label + " sign", max(0.0, -rhs), 0.0))
    return checks


def zeros_suite():
    checks = []
    n = 10
    for k, h in enumerate(struve_h_zeros(-0.5, n).zeros, 1):
        checks.append(Check("h_-1/2,{}".format(k), abs(h - k * math.pi), 1e-10))
    for k, h in enumerate(struve_h_zeros(0.5, n).zeros, 1):
        checks.append(Check("h_1/2,{}".format(k), abs(h - 2 * k * math.pi), 1e-10))
    for nu in INTERLACING_ORDERS:
        table = struve_h_zeros(nu, n)
        bessel = bessel_j_zeros(nu, n + 1).zeros
        for k, h in enumerate(table.zeros):
            # distance into the open interval (j_k, j_(k+1)), negative if outside
            inside = min(h - bessel[k], bessel[k + 1] - h)
            checks.append(Check(
                "interlacing nu={!r} n={}".format(nu, k + 1), max(0.0, -inside), 0.0
            ))
    return checks


def euler_rayleigh_suite():
    checks = []
    for nu in ZERO_ORDERS:
        total = euler_rayleigh_sums(nu)[0]
        expansion = zero_reciprocal_square_sum(nu, 200)
        # the full sum lies in [partial, partial + tail_bound]
        excess = max(
            expansion.partial - total,
            total - expansion.partial - expansion.tail_bound, 0.0
        )
        checks.append(Check("sum 1/h**2 nu={!r}".format(nu), excess, 1e-12))
    for nu in (0.0, 0.5, 1.0):
        zeros = bessel_j_zeros(nu, 200).zeros
        partial = math.fsum(1.0 / (j * j) for j in zeros)
        total = rayleigh_sum_j(nu)
        excess = max(partial - total, total - partial - inverse_power_tail(200, 2), 0.0)
        checks.append(Check("sum 1/j**2 nu={!r}".format(nu), excess, 1e-12))
        checks.append(Check(
            "j_1**2 > 4 (nu + 1) nu={!r}".format(nu),
            max(0.0, 4.0 * (nu + 1.0) - zeros[0] ** 2), 0.0
        ))
    return checks


SUITES = collections.OrderedDict([
    ('gamma', gamma_suite),
    ('closed_form', closed_form_suite),
    ('cross_representation', cross_representation_suite),
    ('ode', ode_suite),
    ('recurrence', recurrence_suite),
    ('integral_identity', integral_identity_suite),
    ('zeros', zeros_suite),
    ('euler_rayleigh', euler_rayleigh_suite),
])


def run_suite(name):
    """ Run one suite; an exception inside it counts as a failed check.
    """
    try:
        checks = SUITES[name]()
    except (StruveError, ArithmeticError, ValueError) as exc:
        log.error("suite %s raised %s: %s", name, type(exc).__name__, exc)
        checks = [Check("{} raised".format(name), float('inf'), 0.0)]
    failures = [
        check for check in checks
        if not check.error <= check.limit
    ]
    for check in failures:
        log.warning(
            "%s: %s error %.3g > %.3g", name, check.name, check.error, check.limit
        )
    return SuiteResult(name, not failures, len(checks), failures)


def run(suites=None):
    names = list(SUITES) if not suites else list(suites)
    return [run_suite(name) for name in names]
