"""
Turan and Laguerre expressions of the Struve functions and the auxiliary
quantities their inequalities are built from.
"""
import collections
import logging
import math

import mpmath
import numpy as np

from . import constants
from .decorators import real_arguments
from .exceptions import DomainError
from .quadrature import gauss_kronrod
from .results import EvalResult
from .special import EPS, beta
from .struve import normalized, struve_h, struve_k, struve_k_lower, struve_l

log = logging.getLogger(__name__)

TuranParts = collections.namedtuple(
    'TuranParts', ['delta', 'here', 'below', 'above']
)

LaguerreParts = collections.namedtuple(
    'LaguerreParts', ['margin', 'lower', 'middle', 'upper']
)

LogConvexity = collections.namedtuple(
    'LogConvexity', ['product', 'square', 'method']
)

ZERO = 'zero'
INFINITY = 'infinity'


def _turan(here, below, above):
    h, b, a = here.value, below.value, above.value
    value = h * h - b * a
    est_error = (
        2.0 * abs(h) * here.est_error + abs(b) * above.est_error
        + abs(a) * below.est_error + EPS * (h * h + abs(b * a))
    )
    delta = EvalResult(
        value, here.method, est_error, here.work + below.work + above.work
    )
    return TuranParts(delta, here, below, above)


def turan_scale(parts):
    """ Size of the terms of a Turan expression, at least 1.
    """
    return max(1.0, parts.here.value ** 2, abs(parts.below.value * parts.above.value))


def turan_parts_h(nu, x, tol=None):
    return _turan(
        struve_h(nu, x, tol=tol), struve_h(nu - 1.0, x, tol=tol),
        struve_h(nu + 1.0, x, tol=tol)
    )


def turan_parts_l(nu, x, tol=None):
    return _turan(
        struve_l(nu, x, tol), struve_l(nu - 1.0, x, tol),
        struve_l(nu + 1.0, x, tol)
    )


def turan_parts_k(nu, x, tol=None):
    return _turan(
        struve_k(nu, x, tol), struve_k_lower(nu, x, tol),
        struve_k(nu + 1.0, x, tol)
    )


@real_arguments(names=('nu', 'x'))
def turan_delta_h(nu, x, tol=None):
    """ ``H_nu(x)**2 - H_(nu-1)(x) H_(nu+1)(x)`` with its error estimate.
    """
    return turan_parts_h(nu, x, tol).delta


@real_arguments(names=('nu', 'x'))
def turan_delta_l(nu, x, tol=None):
    """ ``L_nu(x)**2 - L_(nu-1)(x) L_(nu+1)(x)`` for 0 <= x <= ``L_MAX_X``.
    """
    return turan_parts_l(nu, x, tol).delta


@real_arguments(names=('nu', 'x'))
def turan_delta_k(nu, x, tol=None):
    """
    ``K_nu(x)**2 - K_(nu-1)(x) K_(nu+1)(x)`` for nu > -1/2 and x > 0.
    K_(nu-1) comes from ``struve_k_lower`` when nu - 1 <= -1/2.
    """
    return turan_parts_k(nu, x, tol).delta


def _cal_h_derivative(nu, m, x):
    # termwise m-th derivative of the even power series of calH
    eps = mpmath.mpf(10) ** (-constants.LAGUERRE_DPS)
    lead = mpmath.gamma(mpmath.mpf(3) / 2) * mpmath.gamma(nu + mpmath.mpf(3) / 2)
    total = mpmath.mpf(0)
    largest = mpmath.mpf(0)
    k = (m + 1) // 2
    while True:
        coefficient = (
            (-1) ** k * lead / mpmath.mpf(4) ** k
            * mpmath.rgamma(k + mpmath.mpf(3) / 2)
            * mpmath.rgamma(k + nu + mpmath.mpf(3) / 2)
        )
        term = coefficient * mpmath.ff(2 * k, m) * x ** (2 * k - m)
        total += term
        largest = max(largest, abs(term))
        if k > abs(x) and abs(term) <= eps * largest:
            return total
        k += 1


def laguerre_parts(nu, m, x):
    """
    The three derivatives of calH_nu entering the Laguerre expression of
    order m, summed at ``LAGUERRE_DPS`` digits.
    """
    if abs(nu) > 0.5:
        raise DomainError(
            "the Laguerre inequality is stated for |nu| <= 1/2, got {!r}".format(nu)
        )
    if m != int(m) or not 1 <= m <= constants.LAGUERRE_MAX_ORDER:
        raise DomainError(
            "derivative order must be an integer in 1..{}, got {!r}".format(
                constants.LAGUERRE_MAX_ORDER, m)
        )
    if abs(x) > constants.LAGUERRE_MAX_X:
        raise DomainError(
            "the Laguerre series is summed for |x| <= {!r}, got {!r}".format(
                constants.LAGUERRE_MAX_X, x)
        )
    m = int(m)
    with mpmath.workdps(constants.LAGUERRE_DPS):
        order = mpmath.mpf(nu)
        point = mpmath.mpf(x)
        lower, middle, upper = (
            _cal_h_derivative(order, m + shift, point) for shift in (-1, 0, 1)
        )
        margin = middle * middle - lower * upper
        return LaguerreParts(float(margin), float(lower), float(middle), float(upper))


@real_arguments(names=('nu', 'm', 'x'))
def laguerre_margin(nu, m, x):
    """
    ``[calH^(m)]**2 - calH^(m-1) calH^(m+1)`` at x, from the termwise
    differentiated power series of calH_nu. Requires |nu| <= 1/2,
    1 <= m <= ``LAGUERRE_MAX_ORDER`` and |x| <= ``LAGUERRE_MAX_X``.
    """
    return laguerre_parts(nu, m, x).margin


@real_arguments(names=('nu', 'x', 'delta'))
def log_convexity_x(nu, x, delta):
    """ ``calK_nu(x - delta) calK_nu(x + delta)`` against ``calK_nu(x)**2``.
    """
    if not 0 < delta < x:
        raise DomainError(
            "need 0 < delta < x, got delta={!r}, x={!r}".format(delta, x)
        )
    kind = (constants.CAL_K, nu)
    middle = normalized(kind, x)
    product = normalized(kind, x - delta).value * normalized(kind, x + delta).value
    return LogConvexity(product, middle.value ** 2, middle.method)


@real_arguments(names=('kind', 'nu', 'x', 'delta'))
def log_convexity_nu(kind, nu, x, delta):
    """
    ``f_(nu-delta)(x) f_(nu+delta)(x)`` against ``f_nu(x)**2`` for f one of
    the normalized functions ``calK`` or ``bbH``.
    """
    if kind not in (constants.CAL_K, constants.BB_H):
        raise DomainError(
            "log-convexity in nu is checked for calK and bbH, got {!r}".format(kind)
        )
    if delta <= 0:
        raise DomainError("delta must be positive, got {!r}".format(delta))
    middle = normalized((kind, nu), x)
    product = (
        normalized((kind, nu - delta), x).value
        * normalized((kind, nu + delta), x).value
    )
    return LogConvexity(product, middle.value ** 2, middle.method)


def _check_gamma_ratio_order(nu):
    if not -0.5 < nu < 0:
        raise DomainError("need -1/2 < nu < 0, got {!r}".format(nu))


def gamma_ratio_bound(nu):
    """ ``Gamma(-nu) / Gamma(1/2 - nu)``, the value of calK_nu at 0+.
    """
    _check_gamma_ratio_order(nu)
    return beta(-nu, 0.5) / constants.SQRT_PI


@real_arguments(names=('nu',))
def beta_identity(nu):
    """
    ``(2 / sqrt(pi)) int_0^inf (1 + t**2)**(nu - 1/2) dt`` by quadrature,
    paired with its closed form ``Gamma(-nu) / Gamma(1/2 - nu)``, for
    -1/2 < nu < 0.

    The range [1, inf) is mapped to [0, 1] by t = u**(1 / (2 nu)), which
    leaves a smooth integrand.
    """
    _check_gamma_ratio_order(nu)
    exponent = nu - 0.5
    power = -0.5 / nu

    def head(t):
        return np.power(1.0 + t * t, exponent)

    def tail(u):
        return power * np.power(1.0 + np.power(u, 2.0 * power), exponent)

    near = gauss_kronrod(head, 0.0, 1.0)
    far = gauss_kronrod(tail, 0.0, 1.0)
    scale = 2.0 / constants.SQRT_PI
    quadrature = EvalResult(
        scale * (near.value + far.value), constants.INTEGRAL,
        scale * (near.est_error + far.est_error), near.nodes + far.nodes
    )
    return quadrature, gamma_ratio_bound(nu)


@real_arguments(names=('nu', 'x'))
def chebyshev_covariance(nu, x):
    """
    ``int p int p f g - int p f int p g`` for p = exp(-x t),
    f = (2 / sqrt(pi)) (1 + t**2)**(nu - 3/2) and
    g = (2 / sqrt(pi)) (1 + t**2)**(nu + 1/2) on (0, inf), nu > 1/2.

    Nonnegative when f and g increase together (nu > 3/2) and nonpositive
    for 1/2 < nu < 3/2.
    """
    if nu <= 0.5:
        raise DomainError("need nu > 1/2, got {!r}".format(nu))
    if x <= 0:
        raise DomainError("need x > 0, got {!r}".format(x))
    product = normalized((constants.CAL_K, 2.0 * nu - 0.5), x).value
    first = normalized((constants.CAL_K, nu - 1.0), x).value
    second = normalized((constants.CAL_K, nu + 1.0), x).value
    return 2.0 / (constants.SQRT_PI * x) * product - first * second


def asymptotic_constant(nu, side):
    """
    ``Delta_nu(x) / H_nu(x)**2`` at x = ``ASYMPTOTIC_ZERO_X`` (side ``'zero'``,
    tends to 1 / (nu + 3/2)) or at x = ``ASYMPTOTIC_INFINITY_X`` (side
    ``'infinity'``, tends to 1 / (nu + 1/2) for nu > 3/2).
    """
    if side == ZERO:
        if nu <= -1.5:
            raise DomainError(
                "the zero-side constant needs nu > -3/2, got {!r}".format(nu)
            )
        x = constants.ASYMPTOTIC_ZERO_X
    elif side == INFINITY:
        if nu <= 1.5:
            raise DomainError(
                "the infinity-side constant needs nu > 3/2, got {!r}".format(nu)
            )
        x = constants.ASYMPTOTIC_INFINITY_X
    else:
        raise DomainError(
            "side must be {!r} or {!r}, got {!r}".format(ZERO, INFINITY, side)
        )
    parts = turan_parts_h(nu, x)
    ratio = parts.delta.value / parts.here.value ** 2
    log.debug("Delta/H**2 for nu=%r at x=%r: %r", nu, x, ratio)
    return ratio
