"""
Truncated zero expansions of H_nu for |nu| <= 1/2: the Hadamard product
of calH, the Mittag-Leffler expansions of H_(nu-1)/H_nu and
L_(nu-1)/L_nu, and the logarithmic derivative, together with the series
of H in Bessel functions and the bounds of H by J.

Every truncation carries a rigorous ``tail_bound`` from the zero envelope
(n - 1/4) pi - 1. The ``corrected`` value adds the first two terms of the
tail in powers of x**2, whose coefficients are the Euler-Rayleigh sums of
calH minus the retained partial sums; ``corrected_bound`` bounds what is
left.
"""
import collections
import logging
import math

from . import constants
from .bessel import bessel_j, bessel_j_zero
from .decorators import real_arguments
from .exceptions import DomainError, PoleProximityError
from .results import TruncatedExpansion
from .special import EPS, ln_gamma
from .zeros import (
    inverse_power_tail, max_multiplicity, retained_zeros, struve_h_zero,
    zero_lower_bound
)

log = logging.getLogger(__name__)

Sandwich = collections.namedtuple('Sandwich', ['lower', 'upper'])


def euler_rayleigh_sums(nu):
    """
    ``(sum 1/h**2, sum 1/h**4)`` over all zeros of H_nu with multiplicity,
    read off the first two Taylor coefficients of calH.
    """
    first = 1.0 / (3.0 * (2.0 * nu + 3.0))
    second = first * first - 1.0 / (30.0 * (nu + 1.5) * (nu + 2.5))
    return first, second


def _tail_sums(nu, table):
    # Euler-Rayleigh sums of the omitted zeros
    first, second = euler_rayleigh_sums(nu)
    s1 = math.fsum(m / h ** 2 for h, m in zip(table.zeros, table.multiplicity))
    s2 = math.fsum(m / h ** 4 for h, m in zip(table.zeros, table.multiplicity))
    return max(first - s1, 0.0), max(second - s2, 0.0)


def _envelope(nu, table, x):
    """ Multiplicity, tail sums of 1/l**2 and 1/l**6 and 1/(1 - x**2/l**2).
    """
    n = len(table.zeros)
    lead = zero_lower_bound(n + 1)
    ratio = (x / lead) ** 2
    amplification = 1.0 / (1.0 - ratio) if ratio < 1 else float('inf')
    return (
        max_multiplicity(nu), inverse_power_tail(n, 2), inverse_power_tail(n, 6),
        amplification
    )


@real_arguments(names=('nu', 'x'))
def hadamard_product_eval(nu, x, n_terms):
    """
    ``prod_(n <= N) (1 - x**2 / h_(nu,n)**2)**multiplicity``, converging to
    calH_nu(x). The product is accumulated as a sum of logarithms.
    """
    table = retained_zeros(nu, n_terms)
    n = len(table.zeros)
    x2 = x * x
    sign = 1.0
    logs = []
    for h, m in zip(table.zeros, table.multiplicity):
        factor = 1.0 - x2 / (h * h)
        if factor == 0.0:
            return TruncatedExpansion(0.0, n, 0.0, 0.0, 0.0)
        if factor < 0 and m % 2:
            sign = -sign
        logs.append(m * math.log(abs(factor)))
    partial = sign * math.exp(math.fsum(logs))

    mult, tail2, tail6, amplification = _envelope(nu, table, abs(x))
    if math.isinf(amplification):
        return TruncatedExpansion(partial, n, float('inf'))
    log_tail = x2 * mult * tail2 * amplification
    tail_bound = abs(partial) * -math.expm1(-log_tail)

    t1, t2 = _tail_sums(nu, table)
    corrected = partial * math.exp(-x2 * t1 - 0.5 * x2 * x2 * t2)
    remainder = x2 ** 3 / 3.0 * mult * tail6 * amplification
    corrected_bound = abs(corrected) * (
        math.expm1(remainder) + EPS * n * (1.0 + x2 + x2 * x2)
    )
    return TruncatedExpansion(partial, n, tail_bound, corrected, corrected_bound)


def _check_poles(table, x):
    for h in table.zeros:
        if abs(x - h) < constants.POLE_EXCLUSION:
            raise PoleProximityError(h, x)


def _pole_sum(nu, x, n_terms, modified=False):
    # (2 nu + 1) / x + sum m 2x / (x**2 -+ h**2) with its tail bounds
    if x <= 0:
        raise DomainError(
            "the Mittag-Leffler expansions need x > 0, got {!r}".format(x)
        )
    table = retained_zeros(nu, n_terms)
    n = len(table.zeros)
    x2 = x * x
    if not modified:
        _check_poles(table, x)
    terms = [
        m * 2.0 * x / (x2 + h * h if modified else x2 - h * h)
        for h, m in zip(table.zeros, table.multiplicity)
    ]
    partial = (2.0 * nu + 1.0) / x + math.fsum(terms)
    rounding = EPS * (abs(partial) + math.fsum(abs(t) for t in terms))

    mult, tail2, tail6, amplification = _envelope(nu, table, x)
    t1, t2 = _tail_sums(nu, table)
    if modified:
        tail_bound = 2.0 * x * mult * tail2
        corrected = partial + 2.0 * x * (t1 - x2 * t2)
        corrected_bound = 2.0 * x ** 5 * mult * tail6 + rounding
        return TruncatedExpansion(partial, n, tail_bound, corrected, corrected_bound)
    if math.isinf(amplification):
        return TruncatedExpansion(partial, n, float('inf'))
    tail_bound = 2.0 * x * mult * tail2 * amplification
    corrected = partial - 2.0 * x * (t1 + x2 * t2)
    corrected_bound = 2.0 * x ** 5 * mult * tail6 * amplification + rounding
    return TruncatedExpansion(partial, n, tail_bound, corrected, corrected_bound)


@real_arguments(names=('nu', 'x'))
def mittag_leffler_ratio(nu, x, n_terms):
    """
    ``(2 nu + 1) / x + sum_(n <= N) multiplicity 2x / (x**2 - h_(nu,n)**2)``,
    converging to H_(nu-1)(x) / H_nu(x).

    :raises PoleProximityError: when x is within ``POLE_EXCLUSION`` of a
        retained zero.
    """
    return _pole_sum(nu, x, n_terms)


@real_arguments(names=('nu', 'x'))
def log_derivative_h(nu, x, n_terms):
    """
    ``nu + 1 + sum_(n <= N) multiplicity 2 x**2 / (x**2 - h_(nu,n)**2)``,
    converging to x H'_nu(x) / H_nu(x). Equal to
    ``x * mittag_leffler_ratio - nu`` term by term.
    """
    ratio = _pole_sum(nu, x, n_terms)
    corrected = None if ratio.corrected is None else x * ratio.corrected - nu
    corrected_bound = (
        None if ratio.corrected_bound is None else x * ratio.corrected_bound
    )
    return TruncatedExpansion(
        x * ratio.partial - nu, ratio.n_terms, x * ratio.tail_bound,
        corrected, corrected_bound
    )


@real_arguments(names=('nu', 'x'))
def mittag_leffler_ratio_modified(nu, x, n_terms):
    """
    ``(2 nu + 1) / x + sum_(n <= N) multiplicity 2x / (x**2 + h_(nu,n)**2)``,
    converging to L_(nu-1)(x) / L_nu(x). The omitted tail is positive, so
    the limit lies in ``[partial, partial + tail_bound]``.
    """
    return _pole_sum(nu, x, n_terms, modified=True)


@real_arguments(names=('nu', 'x'))
def j_series_h(nu, x, n_terms):
    """
    ``H_nu(x) = sqrt(x / (2 pi)) sum_n (x/2)**n / (n! (n + 1/2))
    J_(n+nu+1/2)(x)`` for 0 < x <= 20 and nu > -1.

    The tail bound uses ``|J_mu(x)| <= min(1, (x/2)**mu / Gamma(mu + 1))``
    for mu >= 0.
    """
    if nu <= -1:
        raise DomainError("j_series_h needs nu > -1, got {!r}".format(nu))
    if not 0 < x <= 20:
        raise DomainError("j_series_h needs 0 < x <= 20, got {!r}".format(x))
    n_terms = int(n_terms)
    half = 0.5 * x
    log_half = math.log(half)
    terms = []
    for n in range(n_terms):
        order = n + nu + 0.5
        weight = math.exp(n * log_half - ln_gamma(n + 1.0)) / (n + 0.5)
        terms.append(weight * bessel_j(order, x).value)
    scale = math.sqrt(x / (2.0 * math.pi))
    partial = scale * math.fsum(terms)

    bounds = []
    n = n_terms
    while True:
        order = n + nu + 0.5
        weight = math.exp(n * log_half - ln_gamma(n + 1.0)) / (n + 0.5)
        bessel_bound = min(1.0, math.exp(order * log_half - ln_gamma(order + 1.0)))
        bounds.append(weight * bessel_bound)
        n += 1
        if n > x and bounds[-1] <= 1e-3 * EPS * abs(partial):
            break
    # once n > x consecutive bounds at least halve
    tail_bound = scale * (math.fsum(bounds) + bounds[-1])
    return TruncatedExpansion(partial, n_terms, tail_bound)


@real_arguments(names=('nu', 'x'))
def bessel_sandwich_h(nu, x):
    """
    Lower and upper bounds of H_nu(x) by J_nu(x) for |nu| < 1/2 and
    0 < x < j_(nu,1):

    ``c x J_nu(x) < H_nu(x) < c x J_nu(x) j**2 / (j**2 - x**2)``

    with ``c = Gamma(nu + 1) / (sqrt(pi) Gamma(nu + 3/2))`` and j = j_(nu,1).
    """
    if abs(nu) >= 0.5:
        raise DomainError("bessel_sandwich_h needs |nu| < 1/2, got {!r}".format(nu))
    first = bessel_j_zero(nu, 1)
    if not 0 < x < first:
        raise DomainError(
            "bessel_sandwich_h needs 0 < x < j_(nu,1) = {!r}, got {!r}".format(
                first, x)
        )
    factor = math.exp(ln_gamma(nu + 1.0) - ln_gamma(nu + 1.5)) / constants.SQRT_PI
    lower = factor * x * bessel_j(nu, x).value
    upper = lower * first * first / (first * first - x * x)
    return Sandwich(lower, upper)


@real_arguments(names=('nu', 'x'))
def improved_quotient_bound(nu, x):
    """
    Upper bound ``2 nu + 1 + (2 / j_(nu,1)**2 - 1 / (2 (nu + 1))) x**2`` of
    x H_(nu-1)(x) / H_nu(x) for |nu| <= 1/2 and 0 < x < h_(nu,1).
    """
    if abs(nu) > 0.5:
        raise DomainError(
            "improved_quotient_bound needs |nu| <= 1/2, got {!r}".format(nu)
        )
    first_h = struve_h_zero(nu, 1)
    if not 0 < x < first_h:
        raise DomainError(
            "improved_quotient_bound needs 0 < x < h_(nu,1) = {!r}, got {!r}"
            .format(first_h, x)
        )
    first_j = bessel_j_zero(nu, 1)
    return (
        2.0 * nu + 1.0
        + (2.0 / (first_j * first_j) - 0.5 / (nu + 1.0)) * x * x
    )
