"""
Bessel functions of the first and second kind for real order and
non-negative argument, the positive zeros of J and the Rayleigh sum of
their inverse squares.

J is evaluated by the ascending series for x <= ``SERIES_MAX_X``, by the
elementary closed form at half-integer orders, by the Hankel asymptotic
expansion beyond ``ASYMPTOTIC_MIN_X`` and otherwise by the Poisson
integral (or by downward order recurrence below -1/2). Y comes from the
connection formula, with Richardson extrapolation in the order at
integers.
"""
import collections
import logging
import math

import numpy as np

from . import constants
from .decorators import real_arguments
from .exceptions import AccuracyError, BracketError, DomainError
from .quadrature import poisson_integral
from .results import BesselZeroTable, EvalResult
from .roots import ZeroCache, find_root
from .special import (
    EPS, cospi, power_over_gamma, rgamma_series, sinpi
)

log = logging.getLogger(__name__)


HankelSums = collections.namedtuple(
    'HankelSums', ['p', 'q', 'est_error', 'terms']
)


def is_integer(nu):
    return nu == math.floor(nu)


def is_half_integer(nu):
    return is_integer(nu - 0.5)


def hankel_asymptotic(nu, x, tol=None):
    """
    Hankel's P and Q sums for J and Y at large x.

    Terms follow ``b_k = b_(k-1) (4 nu**2 - (2k - 1)**2) / (8 k x)``; P takes
    the even terms and Q the odd ones with alternating signs. The sum
    stops below double precision or at the smallest term. It terminates
    exactly at half-integer orders.

    :raises AccuracyError: when the terms start to grow before reaching
        `tol`.
    """
    tol = constants.DEFAULT_TOL if tol is None else tol
    mu = 4.0 * nu * nu
    terms = [1.0]
    term = 1.0
    k = 0
    error = 0.0
    while True:
        k += 1
        following = term * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        if following == 0.0:
            break
        if abs(following) >= abs(term):
            if abs(term) > tol:
                raise AccuracyError(
                    "Hankel expansion for nu={!r} diverges at x={!r}".format(
                        nu, x),
                    est_error=abs(term)
                )
            error = abs(term)
            break
        terms.append(following)
        term = following
        if abs(term) <= 0.5 * EPS:
            error = abs(term)
            break

    p = math.fsum(terms[0::4]) - math.fsum(terms[2::4])
    q = math.fsum(terms[1::4]) - math.fsum(terms[3::4])
    return HankelSums(p, q, error + EPS * (abs(p) + abs(q)), len(terms))


def _hankel_phase(nu, x):
    # cos and sin of x - (nu/2 + 1/4) pi
    phase = 0.5 * nu + 0.25
    cos_x, sin_x = math.cos(x), math.sin(x)
    c, s = cospi(phase), sinpi(phase)
    return cos_x * c + sin_x * s, sin_x * c - cos_x * s


def _j_series(nu, x, tol):
    total = rgamma_series(0.25 * x * x, 1.0, nu + 1.0, sign=-1, tol=tol)
    prefactor = (0.5 * x) ** nu
    return EvalResult(
        prefactor * total.value, constants.SERIES,
        abs(prefactor) * total.est_error, total.terms
    )


def _j_closed_form(nu, x):
    # J_{1/2} and J_{-1/2} carried to nu by the three-term recurrence
    scale = math.sqrt(2.0 / (math.pi * x))
    upper, lower = scale * math.sin(x), scale * math.cos(x)
    steps = int(round(abs(nu) - 0.5))
    if nu > 0:
        mu = 0.5
        for _ in range(steps):
            upper, lower = 2.0 * mu / x * upper - lower, upper
            mu += 1.0
        value = upper
    else:
        mu = -0.5
        for _ in range(steps):
            lower, upper = 2.0 * mu / x * lower - upper, lower
            mu -= 1.0
        value = lower
    return EvalResult(
        value, constants.CLOSED_FORM, 4 * EPS * (abs(value) + scale) * (steps + 1),
        steps + 1
    )


def _j_asymptotic(nu, x, tol):
    sums = hankel_asymptotic(nu, x, tol)
    scale = math.sqrt(2.0 / (math.pi * x))
    cos_chi, sin_chi = _hankel_phase(nu, x)
    value = scale * (sums.p * cos_chi - sums.q * sin_chi)
    return EvalResult(
        value, constants.ASYMPTOTIC,
        scale * sums.est_error + EPS * x * scale, sums.terms
    )


def _j_integral(nu, x, tol):
    prefactor = 2.0 * power_over_gamma(0.5 * x, nu, nu + 0.5) / constants.SQRT_PI
    result = poisson_integral(nu, x, np.cos, tol=tol)
    return EvalResult(
        prefactor * result.value, constants.INTEGRAL,
        prefactor * result.est_error, result.nodes
    )


def _j_recurrence(nu, x, tol):
    steps = int(math.floor(-0.5 - nu)) + 1
    top = nu + steps
    upper = evaluate_j(top + 1.0, x, tol)
    lower = evaluate_j(top, x, tol)
    above, below = upper.value, lower.value
    err_above, err_below = upper.est_error, lower.est_error
    mu = top
    for _ in range(steps):
        factor = 2.0 * mu / x
        above, below = below, factor * below - above
        err_above, err_below = err_below, abs(factor) * err_below + err_above
        mu -= 1.0
    return EvalResult(
        below, constants.RECURRENCE, err_below, upper.work + lower.work + steps
    )


def evaluate_j(nu, x, tol=None):
    """ J_nu(x) for any real order and x >= 0, without argument checks.
    """
    tol = constants.DEFAULT_TOL if tol is None else tol
    if x == 0:
        if nu == 0:
            return EvalResult(1.0, constants.SERIES, 0.0, 1)
        if nu > 0 or is_integer(nu):
            return EvalResult(0.0, constants.SERIES, 0.0, 1)
        raise DomainError("J_{!r} is unbounded at x=0".format(nu))

    if nu < 0 and is_integer(nu):
        result = evaluate_j(-nu, x, tol)
        sign = -1.0 if int(-nu) % 2 else 1.0
        return result._replace(value=sign * result.value)

    if is_half_integer(nu) and (nu < 0 or x >= nu):
        return _j_closed_form(nu, x)
    if x <= constants.SERIES_MAX_X:
        return _j_series(nu, x, tol)
    if x > constants.ASYMPTOTIC_MIN_X:
        try:
            return _j_asymptotic(nu, x, tol)
        except AccuracyError as exc:
            log.debug("J_%r(%r): %s", nu, x, exc)
    if nu > -0.5:
        return _j_integral(nu, x, tol)
    return _j_recurrence(nu, x, tol)


def _y_asymptotic(nu, x, tol):
    sums = hankel_asymptotic(nu, x, tol)
    scale = math.sqrt(2.0 / (math.pi * x))
    cos_chi, sin_chi = _hankel_phase(nu, x)
    value = scale * (sums.p * sin_chi + sums.q * cos_chi)
    return EvalResult(
        value, constants.ASYMPTOTIC,
        scale * sums.est_error + EPS * x * scale, sums.terms
    )


def _y_connection(nu, x, tol):
    positive = evaluate_j(nu, x, tol)
    negative = evaluate_j(-nu, x, tol)
    s = sinpi(nu)
    c = cospi(nu)
    value = (positive.value * c - negative.value) / s
    est_error = (
        abs(c) * positive.est_error + negative.est_error
        + EPS * (abs(positive.value) + abs(negative.value))
    ) / abs(s)
    method = (
        constants.CLOSED_FORM
        if positive.method == negative.method == constants.CLOSED_FORM
        else positive.method
    )
    return EvalResult(value, method, est_error, positive.work + negative.work)


def evaluate_y(nu, x, tol=None):
    tol = constants.DEFAULT_TOL if tol is None else tol
    if x > constants.ASYMPTOTIC_MIN_X:
        try:
            return _y_asymptotic(nu, x, tol)
        except AccuracyError as exc:
            log.debug("Y_%r(%r): %s", nu, x, exc)
    if not is_integer(nu):
        return _y_connection(nu, x, tol)

    # Y at integer order: 2 Y(n + eps) - Y(n + 2 eps) removes the O(eps) term
    step = constants.RICHARDSON_STEP
    near = _y_connection(nu + step, x, tol)
    far = _y_connection(nu + 2 * step, x, tol)
    value = 2.0 * near.value - far.value
    # the O(eps**2) remainder is estimated by the first-difference change
    est_error = (
        2.0 * near.est_error + far.est_error + step * abs(far.value - near.value)
    )
    return EvalResult(value, near.method, est_error, near.work + far.work)


def _check_argument(x, strict=False):
    if x < 0 or (strict and x == 0):
        raise DomainError("x must be {}, got {!r}".format(
            "positive" if strict else "non-negative", x))
    if x > constants.X_MAX:
        raise DomainError(
            "x={!r} exceeds the supported range X_MAX={!r}".format(
                x, constants.X_MAX)
        )


@real_arguments(names=('nu', 'x', 'tol'))
def bessel_j(nu, x, tol=None):
    """ J_nu(x) for nu > -1 and 0 <= x <= X_MAX.
    """
    if nu <= -1:
        raise DomainError("bessel_j requires nu > -1, got {!r}".format(nu))
    _check_argument(x)
    return evaluate_j(nu, x, tol)


@real_arguments(names=('nu', 'x', 'tol'))
def bessel_y(nu, x, tol=None):
    """ Y_nu(x) for real nu and 0 < x <= X_MAX.
    """
    _check_argument(x, strict=True)
    return evaluate_y(nu, x, tol)


def mcmahon_zero(nu, n):
    """ McMahon's large-n approximation of the n-th positive zero of J_nu.
    """
    beta = (n + 0.5 * nu - 0.25) * math.pi
    mu = 4.0 * nu * nu
    eight_beta = 8.0 * beta
    return (
        beta - (mu - 1.0) / eight_beta
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * eight_beta ** 3)
    )


def _extend_j_zeros(nu, zeros, count):

    def func(x):
        return evaluate_j(nu, x).value

    def derivative(x):
        return nu / x * evaluate_j(nu, x).value - evaluate_j(nu + 1.0, x).value

    step = constants.BESSEL_SCAN_STEP
    limit = 2 * constants.X_MAX
    while len(zeros) < count:
        n = len(zeros) + 1
        if zeros:
            previous = zeros[-1]
            gap = min(2.0, mcmahon_zero(nu, n) - 0.5 * math.pi - previous)
            lo = previous + max(1.0, gap)
        else:
            # j_(nu,1) exceeds both nu and 2 sqrt(nu + 1)
            lo = max(nu, 2.0 * math.sqrt(nu + 1.0))
        f_lo = func(lo)
        hi = lo + step
        f_hi = func(hi)
        while f_lo * f_hi > 0:
            lo, f_lo = hi, f_hi
            hi = lo + step
            if hi > limit:
                raise BracketError(
                    "no sign change of J_{!r} found after x={!r}".format(nu, lo)
                )
            f_hi = func(hi)
        zeros.append(find_root(func, derivative, lo, hi))
    log.debug("J_%r zero table extended to %d entries", nu, len(zeros))
    return zeros


_bessel_zero_cache = ZeroCache(_extend_j_zeros)


@real_arguments(names=('nu',))
def bessel_j_zeros(nu, count):
    """ Table of the first `count` positive zeros of J_nu, nu > -1.
    """
    if nu <= -1:
        raise DomainError("bessel_j_zeros requires nu > -1, got {!r}".format(nu))
    if count < 1:
        raise DomainError("count must be positive, got {!r}".format(count))
    zeros = _bessel_zero_cache.get(nu, int(count))
    return BesselZeroTable(float(nu), zeros, len(zeros))


def bessel_j_zero(nu, n):
    """ The n-th positive zero j_(nu,n) of J_nu.
    """
    if n < 1 or n != int(n):
        raise DomainError("n must be a positive integer, got {!r}".format(n))
    return bessel_j_zeros(nu, int(n)).zeros[int(n) - 1]


@real_arguments(names=('nu',))
def rayleigh_sum_j(nu):
    """ sum_n 1 / j_(nu,n)**2 = 1 / (4 (nu + 1)).
    """
    if nu <= -1:
        raise DomainError("rayleigh_sum_j requires nu > -1, got {!r}".format(nu))
    return 0.25 / (nu + 1.0)
