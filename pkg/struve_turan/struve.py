"""
Struve functions of the first kind H, modified L and second kind K, their
first derivatives, the normalized functions calH, bbH and calK and the
residuals of the Struve differential equation and recurrences.

H is evaluated by the ascending series for x <= ``SERIES_MAX_X``, by the
Poisson-type integral up to ``INTEGRAL_MAX_X`` and by ``Y + K`` beyond,
with the large-argument expansion of K. Negative half-integer orders
reduce to Bessel functions of positive order; other orders below -1/2
are reached by downward recurrence.
"""
import logging
import math

import numpy as np

from . import constants
from .bessel import evaluate_j, evaluate_y, is_half_integer
from .decorators import fallback, real_arguments
from .exceptions import AccuracyError, DomainError
from .quadrature import laplace_integral, poisson_integral
from .results import EvalResult, NormalizedId
from .special import (
    EPS, gamma, ln_gamma, power_over_gamma, rgamma, rgamma_series
)

log = logging.getLogger(__name__)


def inhomogeneous_term(nu, x):
    """ (x/2)**nu / (sqrt(pi) Gamma(nu + 3/2)), the source term of rec2-rec4.
    """
    return (0.5 * x) ** nu * rgamma(nu + 1.5) / constants.SQRT_PI


def _kernel_prefactor(nu, x):
    # 2 (x/2)**nu / (sqrt(pi) Gamma(nu + 1/2)) for nu > -1/2
    return 2.0 * power_over_gamma(0.5 * x, nu, nu + 0.5) / constants.SQRT_PI


def _value_at_zero(nu):
    if nu > -1 or (nu < 0 and is_half_integer(nu)):
        return 0.0
    raise DomainError("H_{!r} is unbounded at x=0".format(nu))


def _check_raw_argument(x):
    if x < 0:
        raise DomainError(
            "raw Struve functions need x >= 0, got {!r}; use normalized()"
            .format(x)
        )
    if x > constants.X_MAX:
        raise DomainError(
            "x={!r} exceeds the supported range X_MAX={!r}".format(
                x, constants.X_MAX)
        )


def _series(nu, x, sign, tol):
    total = rgamma_series(0.25 * x * x, 1.5, nu + 1.5, sign=sign, tol=tol)
    prefactor = (0.5 * x) ** (nu + 1.0)
    return prefactor, total


@real_arguments(names=('nu', 'x', 'tol'))
def struve_h_series(nu, x, tol=None):
    """
    H_nu(x) from the ascending series, for any real order and x >= 0.

    :raises AccuracyError: when the largest term exceeds
        ``CANCELLATION_LIMIT`` times the result. The exception carries the
        series value as its estimate.
    """
    tol = constants.DEFAULT_TOL if tol is None else tol
    _check_raw_argument(x)
    if x == 0:
        return EvalResult(_value_at_zero(nu), constants.SERIES, 0.0, 1)
    prefactor, total = _series(nu, x, -1, tol)
    value = prefactor * total.value
    if total.max_term > constants.CANCELLATION_LIMIT * abs(total.value):
        raise AccuracyError(
            "series for H_{!r}({!r}) cancels: max term {:.3g}, sum {:.3g}".format(
                nu, x, total.max_term, total.value),
            estimate=value,
            est_error=abs(prefactor) * EPS * total.max_term * total.terms
        )
    return EvalResult(
        value, constants.SERIES, abs(prefactor) * total.est_error, total.terms
    )


@real_arguments(names=('nu', 'x', 'tol'))
def struve_h_integral(nu, x, tol=None):
    """ H_nu(x) from the Poisson-type integral, nu > -1/2 and x >= 0.
    """
    if nu <= -0.5:
        raise DomainError(
            "the integral representation of H needs nu > -1/2, got {!r}"
            .format(nu)
        )
    _check_raw_argument(x)
    if x == 0:
        return EvalResult(0.0, constants.INTEGRAL, 0.0, 0)
    prefactor = _kernel_prefactor(nu, x)
    result = poisson_integral(nu, x, np.sin, tol=tol)
    return EvalResult(
        prefactor * result.value, constants.INTEGRAL,
        prefactor * result.est_error, result.nodes
    )


def _h_closed_form(nu, x, tol=None):
    # H_(-n-1/2) = (-1)**n J_(n+1/2)
    if not (nu < 0 and is_half_integer(nu)):
        raise DomainError(
            "the Bessel reduction needs a negative half-integer order, got {!r}"
            .format(nu)
        )
    n = int(round(-nu - 0.5))
    result = evaluate_j(n + 0.5, x, tol)
    sign = -1.0 if n % 2 else 1.0
    return EvalResult(
        sign * result.value, constants.CLOSED_FORM, result.est_error, result.work
    )


def _h_recurrence(nu, x, tol=None):
    # rec2 run downwards from the first two orders above -1/2
    steps = int(math.floor(-0.5 - nu)) + 1
    if steps < 1:
        raise DomainError(
            "downward recurrence is only used for nu <= -1/2, got {!r}".format(nu)
        )
    if x == 0:
        return EvalResult(_value_at_zero(nu), constants.RECURRENCE, 0.0, 1)
    top = nu + steps
    upper = struve_h(top + 1.0, x, tol=tol)
    lower = struve_h(top, x, tol=tol)
    above, below = upper.value, lower.value
    err_above, err_below = upper.est_error, lower.est_error
    mu = top
    for _ in range(steps):
        factor = 2.0 * mu / x
        above, below = below, factor * below - above + inhomogeneous_term(mu, x)
        err_above, err_below = err_below, abs(factor) * err_below + err_above
        mu -= 1.0
    return EvalResult(
        below, constants.RECURRENCE, err_below, upper.work + lower.work + steps
    )


@real_arguments(names=('nu', 'x', 'tol'))
def struve_h_asymptotic(nu, x, tol=None):
    """ H_nu(x) = Y_nu(x) + K_nu(x) with the large-argument expansion of K.
    """
    _check_raw_argument(x)
    if x == 0:
        raise DomainError("the Y + K path needs x > 0")
    k = struve_k_asymptotic(nu, x, tol)
    y = evaluate_y(nu, x, tol)
    return EvalResult(
        y.value + k.value, constants.VIA_Y_PLUS_K,
        y.est_error + k.est_error, y.work + k.work
    )


def _integral_or_recurrence(nu, x, tol=None):
    if nu > -0.5:
        return struve_h_integral(nu, x, tol)
    return _h_recurrence(nu, x, tol)


_series_with_fallback = fallback(_integral_or_recurrence)(struve_h_series)


H_METHODS = {
    constants.SERIES: struve_h_series,
    constants.INTEGRAL: struve_h_integral,
    constants.VIA_Y_PLUS_K: struve_h_asymptotic,
    constants.CLOSED_FORM: _h_closed_form,
    constants.RECURRENCE: _h_recurrence,
}


@real_arguments(names=('nu', 'x'))
def struve_h(nu, x, method=None, tol=None):
    """
    H_nu(x) for x >= 0 with automatic choice of representation.

    :param method: optional name of a representation in ``H_METHODS``
        forcing that path.
    """
    _check_raw_argument(x)
    if method is not None:
        try:
            evaluator = H_METHODS[method]
        except KeyError:
            raise DomainError("unknown method {!r} for H".format(method))
        return evaluator(nu, x, tol)

    if x == 0:
        return EvalResult(_value_at_zero(nu), constants.SERIES, 0.0, 1)
    if nu < 0 and is_half_integer(nu):
        return _h_closed_form(nu, x, tol)
    if x <= constants.SERIES_MAX_X:
        return _series_with_fallback(nu, x, tol)
    if x > constants.INTEGRAL_MAX_X:
        try:
            return struve_h_asymptotic(nu, x, tol)
        except AccuracyError as exc:
            log.debug("H_%r(%r) not via Y + K: %s", nu, x, exc)
    return _integral_or_recurrence(nu, x, tol)


@real_arguments(names=('nu', 'x'))
def struve_h_prime(nu, x, tol=None):
    """ H'_nu(x) = H_(nu-1)(x) - (nu / x) H_nu(x) for x > 0.
    """
    if x <= 0:
        raise DomainError("struve_h_prime needs x > 0, got {!r}".format(x))
    lower = struve_h(nu - 1.0, x, tol=tol)
    here = struve_h(nu, x, tol=tol)
    return EvalResult(
        lower.value - nu / x * here.value, here.method,
        lower.est_error + abs(nu / x) * here.est_error, lower.work + here.work
    )


@real_arguments(names=('nu', 'x'))
def struve_h_derivative(nu, x, tol=None):
    """
    H'_nu(x) without the order recurrence: the termwise differentiated
    series for x <= ``SERIES_MAX_X``, or the differentiated integral
    ``(nu / x) H_nu + c x**nu int_0^1 t (1 - t**2)**(nu - 1/2) cos(x t) dt``
    for nu > -1/2. Other orders fall back to ``struve_h_prime``.
    """
    tol = constants.DEFAULT_TOL if tol is None else tol
    if x <= 0:
        raise DomainError("struve_h_derivative needs x > 0, got {!r}".format(x))
    if x <= constants.SERIES_MAX_X:
        # (2k + nu + 1) / 2 = ((k + 1/2) + (k + nu + 1/2)) / 2
        z = 0.25 * x * x
        first = rgamma_series(z, 0.5, nu + 1.5, tol=tol)
        second = rgamma_series(z, 1.5, nu + 0.5, tol=tol)
        prefactor = (0.5 * x) ** nu
        value = prefactor * (0.5 * first.value + 0.5 * second.value)
        est_error = abs(prefactor) * (
            first.est_error + second.est_error
        )
        return EvalResult(
            value, constants.SERIES, est_error,
            first.terms + second.terms
        )
    if nu > -0.5:
        here = struve_h(nu, x, tol=tol)
        result = poisson_integral(nu, x, np.cos, power=1, tol=tol)
        prefactor = _kernel_prefactor(nu, x)
        return EvalResult(
            nu / x * here.value + prefactor * result.value, constants.INTEGRAL,
            abs(nu / x) * here.est_error + prefactor * result.est_error,
            here.work + result.nodes
        )
    return struve_h_prime(nu, x, tol)


@real_arguments(names=('nu', 'x', 'tol'))
def struve_l(nu, x, tol=None):
    """
    Modified Struve function L_nu(x) for 0 <= x <= ``L_MAX_X`` from
    its series, which has no cancellation for nu > -3/2.

    :raises AccuracyError: if the result overflows.
    """
    tol = constants.DEFAULT_TOL if tol is None else tol
    if x < 0 or x > constants.L_MAX_X:
        raise DomainError(
            "struve_l needs 0 <= x <= {!r}, got {!r}".format(
                constants.L_MAX_X, x)
        )
    if x == 0:
        return EvalResult(_value_at_zero(nu), constants.SERIES, 0.0, 1)
    prefactor, total = _series(nu, x, 1, tol)
    value = prefactor * total.value
    if not math.isfinite(value):
        raise AccuracyError(
            "L_{!r}({!r}) overflows".format(nu, x), estimate=value
        )
    return EvalResult(
        value, constants.SERIES, abs(prefactor) * total.est_error, total.terms
    )


def _check_k_arguments(nu, x):
    if nu <= -0.5:
        raise DomainError("K is available for nu > -1/2, got {!r}".format(nu))
    if x <= 0:
        raise DomainError("K needs x > 0, got {!r}".format(x))
    if x > constants.X_MAX:
        raise DomainError(
            "x={!r} exceeds the supported range X_MAX={!r}".format(
                x, constants.X_MAX)
        )


@real_arguments(names=('nu', 'x', 'power', 'log_power', 'tol'))
def laplace_moment(nu, x, power=0, log_power=0, tol=None):
    """
    ``(2 / sqrt(pi)) int_0^inf t**power log(1 + t**2)**log_power
    (1 + t**2)**(nu - 1/2) exp(-x t) dt``.

    With ``power=log_power=0`` this is calK_nu(x); ``power=m`` gives
    ``(-1)**m`` times its m-th x-derivative and ``log_power=m`` its m-th
    derivative in nu.
    """
    if x <= 0:
        raise DomainError("laplace_moment needs x > 0, got {!r}".format(x))
    result = laplace_integral(nu, x, power=power, log_power=log_power, tol=tol)
    scale = 2.0 / constants.SQRT_PI
    return EvalResult(
        scale * result.value, constants.INTEGRAL, scale * result.est_error,
        result.nodes
    )


@real_arguments(names=('nu', 'x', 'tol'))
def struve_k_integral(nu, x, tol=None):
    """ K_nu(x) from its Laplace-type integral, nu > -1/2, x > 0.
    """
    _check_k_arguments(nu, x)
    prefactor = _kernel_prefactor(nu, x)
    result = laplace_integral(nu, x, tol=tol)
    return EvalResult(
        prefactor * result.value, constants.INTEGRAL,
        prefactor * result.est_error, result.nodes
    )


@real_arguments(names=('nu', 'x', 'tol'))
def struve_k_asymptotic(nu, x, tol=None):
    """
    Large-argument expansion
    ``K_nu(x) ~ (1/pi) sum_k Gamma(k + 1/2) (x/2)**(nu - 2k - 1)
    / Gamma(nu + 1/2 - k)``.

    Finite at half-integer orders. Valid for every real order.

    :raises AccuracyError: when the terms grow before the sum settles
        below `tol`.
    """
    tol = constants.DEFAULT_TOL if tol is None else tol
    if x <= 0:
        raise DomainError("K needs x > 0, got {!r}".format(x))
    term = (0.5 * x) ** (nu - 1.0) * rgamma(nu + 0.5) / constants.SQRT_PI
    terms = [term]
    ratio_scale = (2.0 / x) ** 2
    k = 0
    error = 0.0
    while term != 0.0:
        following = term * (k + 0.5) * (nu - 0.5 - k) * ratio_scale
        k += 1
        partial = abs(math.fsum(terms))
        if abs(following) >= abs(term):
            if abs(term) > tol * partial:
                raise AccuracyError(
                    "K_{!r} expansion diverges at x={!r}".format(nu, x),
                    estimate=math.fsum(terms), est_error=abs(term)
                )
            error = abs(term)
            break
        terms.append(following)
        term = following
        if abs(term) <= EPS * partial:
            error = abs(term)
            break
    value = math.fsum(terms)
    return EvalResult(
        value, constants.ASYMPTOTIC, error + EPS * abs(value), len(terms)
    )


def _k_via_h_minus_y(nu, x, tol=None):
    if x > constants.INTEGRAL_MAX_X and nu > -0.5:
        h = struve_h_integral(nu, x, tol)
    else:
        h = struve_h(nu, x, tol=tol)
    y = evaluate_y(nu, x, tol)
    return EvalResult(
        h.value - y.value, constants.VIA_H_MINUS_Y,
        h.est_error + y.est_error + EPS * (abs(h.value) + abs(y.value)),
        h.work + y.work
    )


K_METHODS = {
    constants.INTEGRAL: struve_k_integral,
    constants.ASYMPTOTIC: struve_k_asymptotic,
    constants.VIA_H_MINUS_Y: _k_via_h_minus_y,
}


_k_asymptotic_with_fallback = fallback(struve_k_integral)(struve_k_asymptotic)


@real_arguments(names=('nu', 'x', 'tol'))
def struve_k(nu, x, tol=None, method=None):
    """
    K_nu(x) = H_nu(x) - Y_nu(x) for nu > -1/2 and x > 0: the Laplace
    integral below ``K_ASYMPTOTIC_MIN_X``, the asymptotic expansion beyond.

    :param method: optional name of a representation in ``K_METHODS``.
        ``via_h_minus_y`` is the cross-check path.
    """
    _check_k_arguments(nu, x)
    if method is not None:
        try:
            evaluator = K_METHODS[method]
        except KeyError:
            raise DomainError("unknown method {!r} for K".format(method))
        return evaluator(nu, x, tol)
    if x >= constants.K_ASYMPTOTIC_MIN_X:
        return _k_asymptotic_with_fallback(nu, x, tol)
    return struve_k_integral(nu, x, tol)


def struve_k_lower(nu, x, tol=None):
    """
    K_(nu-1)(x) from its own quadrature when nu - 1 > -1/2; below that
    from ``(2 nu / x) K_nu - c x**nu int t (1 + t**2)**(nu - 1/2) e**(-x t)``.
    """
    if nu - 1.0 > -0.5:
        return struve_k(nu - 1.0, x, tol)
    _check_k_arguments(nu, x)
    here = struve_k_integral(nu, x, tol)
    moment = laplace_integral(nu, x, power=1, tol=tol)
    prefactor = _kernel_prefactor(nu, x)
    return EvalResult(
        2.0 * nu / x * here.value - prefactor * moment.value, constants.INTEGRAL,
        abs(2.0 * nu / x) * here.est_error + prefactor * moment.est_error,
        here.work + moment.nodes
    )


@real_arguments(names=('nu', 'x'))
def struve_k_prime(nu, x, tol=None, method=None):
    """
    K'_nu(x) = (nu / x) K_nu(x) - c x**nu int t (1 + t**2)**(nu - 1/2)
    e**(-x t) dt.

    :param method: ``'recurrence'`` uses rec1K, ``K_(nu-1) - (nu / x) K_nu``,
        instead of the first moment.
    """
    _check_k_arguments(nu, x)
    here = struve_k(nu, x, tol)
    if method == constants.RECURRENCE:
        lower = struve_k_lower(nu, x, tol)
        return EvalResult(
            lower.value - nu / x * here.value, constants.RECURRENCE,
            lower.est_error + abs(nu / x) * here.est_error, lower.work + here.work
        )
    moment = laplace_integral(nu, x, power=1, tol=tol)
    prefactor = _kernel_prefactor(nu, x)
    return EvalResult(
        nu / x * here.value - prefactor * moment.value, constants.INTEGRAL,
        abs(nu / x) * here.est_error + prefactor * moment.est_error,
        here.work + moment.nodes
    )


def _normalized_id(id_or_kind, nu=None):
    if isinstance(id_or_kind, NormalizedId):
        return id_or_kind
    if nu is None:
        kind, nu = id_or_kind
    else:
        kind = id_or_kind
    return NormalizedId(kind, float(nu))


def _cal_h(nu, x, tol):
    if nu <= -1.5:
        raise DomainError("calH needs nu > -3/2, got {!r}".format(nu))
    ax = abs(x)
    if ax <= constants.SERIES_MAX_X:
        # even in x, exactly 1 at the origin
        total = rgamma_series(0.25 * x * x, 1.5, nu + 1.5, tol=tol)
        scale = 0.5 * constants.SQRT_PI * gamma(nu + 1.5)
        return EvalResult(
            scale * total.value, constants.SERIES, scale * total.est_error,
            total.terms
        )
    raw = struve_h(nu, ax, tol=tol)
    log_prefactor = (
        0.5 * math.log(math.pi) + nu * math.log(2.0)
        - (nu + 1.0) * math.log(ax) + ln_gamma(nu + 1.5)
    )
    prefactor = math.exp(log_prefactor)
    return EvalResult(
        prefactor * raw.value, raw.method, prefactor * raw.est_error, raw.work
    )


@real_arguments(names=('function_id', 'x'))
def normalized(function_id, x, tol=None):
    """
    One of the normalized functions

    * calH: ``sqrt(pi) 2**nu x**(-nu-1) Gamma(nu + 3/2) H_nu(x)``, even in x,
      nu > -3/2;
    * bbH: ``2**nu x**(-nu) Gamma(nu + 1/2) H_nu(x)``, odd in x, nu > -1/2;
    * calK: ``2**nu x**(-nu) Gamma(nu + 1/2) K_nu(x)``, x > 0, nu > -1/2.

    `function_id` is a ``NormalizedId`` or a ``(kind, nu)`` pair.
    """
    tol = constants.DEFAULT_TOL if tol is None else tol
    kind, nu = _normalized_id(function_id)
    if kind == constants.CAL_H:
        return _cal_h(nu, x, tol)
    if kind == constants.BB_H:
        if nu <= -0.5:
            raise DomainError("bbH needs nu > -1/2, got {!r}".format(nu))
        cal = _cal_h(nu, x, tol)
        scale = x / (constants.SQRT_PI * (nu + 0.5))
        return cal._replace(
            value=scale * cal.value, est_error=abs(scale) * cal.est_error
        )
    if kind == constants.CAL_K:
        _check_k_arguments(nu, x)
        return laplace_moment(nu, x, tol=tol)
    raise DomainError("unknown normalized function {!r}".format(kind))


@real_arguments(names=('nu', 'x'))
def ode_residual(nu, x):
    """
    Relative residual of the Struve equation
    ``H'' + H'/x + (1 - nu**2/x**2) H = (x/2)**(nu-1) / (sqrt(pi) Gamma(nu+1/2))``
    with both derivatives taken from nested order recurrences.
    """
    if x <= 0:
        raise DomainError("ode_residual needs x > 0, got {!r}".format(x))
    h0 = struve_h(nu, x).value
    h1 = struve_h(nu - 1.0, x).value
    h2 = struve_h(nu - 2.0, x).value
    first = h1 - nu / x * h0
    lower_first = h2 - (nu - 1.0) / x * h1
    second = lower_first + nu / (x * x) * h0 - nu / x * first
    lhs = second + first / x + (1.0 - nu * nu / (x * x)) * h0
    rhs = (0.5 * x) ** (nu - 1.0) * rgamma(nu + 0.5) / constants.SQRT_PI
    return abs(lhs - rhs) / max(1.0, abs(rhs))


RECURRENCES = ('rec2', 'rec3', 'rec4', 'rec1K')


@real_arguments(names=('nu', 'x'))
def recurrence_residual(nu, x, which):
    """
    Residual of a three-term relation normalized by its largest term.

    * rec2: ``H_(nu-1) + H_(nu+1) - (2 nu / x) H_nu - c``
    * rec3: ``H_(nu-1) - H_(nu+1) - 2 H'_nu + c``
    * rec4: ``H_(nu+1) - (nu / x) H_nu + H'_nu - c``
    * rec1K: ``K_(nu-1) - (nu / x) K_nu - K'_nu``

    with ``c = (x/2)**nu / (sqrt(pi) Gamma(nu + 3/2))``; H' comes from
    ``struve_h_derivative`` and K' from the first Laplace moment.
    """
    if x <= 0:
        raise DomainError("recurrence_residual needs x > 0, got {!r}".format(x))
    if which == 'rec1K':
        if nu - 1.0 > -0.5:
            lower = struve_k(nu - 1.0, x).value
        else:
            lower = _k_via_h_minus_y(nu - 1.0, x).value
        terms = [
            lower, -nu / x * struve_k(nu, x).value, -struve_k_prime(nu, x).value
        ]
    else:
        c = inhomogeneous_term(nu, x)
        here = struve_h(nu, x).value
        above = struve_h(nu + 1.0, x).value
        if which == 'rec2':
            below = struve_h(nu - 1.0, x).value
            terms = [below, above, -2.0 * nu / x * here, -c]
        elif which == 'rec3':
            below = struve_h(nu - 1.0, x).value
            slope = struve_h_derivative(nu, x).value
            terms = [below, -above, -2.0 * slope, c]
        elif which == 'rec4':
            slope = struve_h_derivative(nu, x).value
            terms = [above, -nu / x * here, slope, -c]
        else:
            raise DomainError(
                "unknown recurrence {!r}, expected one of {}".format(
                    which, ", ".join(RECURRENCES))
            )
    scale = max(abs(t) for t in terms)
    return abs(math.fsum(terms)) / scale if scale else 0.0
