"""
Adaptive Gauss-Kronrod (7, 15) panel quadrature and the two integral
kernels used throughout the package: the finite Poisson-type kernel
``(1 - t**2)**(nu - 1/2)`` on [0, 1] and the Laplace-type kernel
``(1 + t**2)**(nu - 1/2) exp(-x t)`` on [0, inf).
"""
import collections
import heapq
import logging
import math

import numpy as np

from . import constants
from .exceptions import DomainError

log = logging.getLogger(__name__)

EPS = 2.220446049250313e-16

# Kronrod abscissae on [0, 1] (symmetric) with Kronrod and Gauss weights
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
# Gauss nodes are the odd-indexed Kronrod abscissae
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[[13, 11, 9]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]


QuadResult = collections.namedtuple('QuadResult', ['value', 'est_error', 'nodes'])


def _panel(f, a, b):
    half = 0.5 * (b - a)
    centre = 0.5 * (a + b)
    values = f(centre + half * NODES)
    kronrod = half * math.fsum(KRONROD_WEIGHTS * values)
    gauss = half * math.fsum(GAUSS_WEIGHTS * values)
    resabs = abs(half) * math.fsum(KRONROD_WEIGHTS * np.abs(values))
    return kronrod, abs(kronrod - gauss), resabs


def gauss_kronrod(f, a, b, tol=None, breakpoints=(), limit=None):
    """
    Integrate the vectorised function `f` over [a, b].

    The interval is first split at `breakpoints`; the panel with the
    largest error estimate is bisected until the summed estimate drops
    below ``tol`` relative to the integral, or below the rounding floor of
    the integral of ``|f|`` when cancellation makes a relative target
    unreachable.

    Panels are summed in left-to-right order so the result does not depend
    on the refinement history.
    """
    tol = constants.QUAD_TOL if tol is None else tol
    limit = constants.QUAD_PANEL_LIMIT if limit is None else limit

    cuts = [a] + sorted(p for p in breakpoints if a < p < b) + [b]
    heap = []
    for left, right in zip(cuts[:-1], cuts[1:]):
        value, err, resabs = _panel(f, left, right)
        heap.append((-err, left, right, value, resabs))
    heapq.heapify(heap)

    while True:
        total_err = math.fsum(-item[0] for item in heap)
        total = math.fsum(item[3] for item in heap)
        total_abs = math.fsum(item[4] for item in heap)
        if total_err <= max(tol * abs(total), 50 * EPS * total_abs):
            break
        if len(heap) >= limit:
            log.warning(
                "quadrature on [%r, %r] stopped at %d panels with error %.3g",
                a, b, len(heap), total_err
            )
            break
        neg_err, left, right, _, _ = heapq.heappop(heap)
        mid = 0.5 * (left + right)
        for lo, hi in ((left, mid), (mid, right)):
            value, err, resabs = _panel(f, lo, hi)
            heapq.heappush(heap, (-err, lo, hi, value, resabs))

    ordered = sorted(heap, key=lambda item: item[1])
    value = math.fsum(item[3] for item in ordered)
    est_error = math.fsum(-item[0] for item in ordered)
    return QuadResult(value, est_error, 15 * len(ordered))


def endpoint_exponent(nu):
    """ Power p of the substitution t = 1 - u**p used on [0, 1].
    """
    if nu >= 0.5:
        return 2.0
    return 2.0 / (nu + 0.5)


def poisson_integral(nu, x, trig, power=0, tol=None):
    """
    ``int_0^1 t**power (1 - t**2)**(nu - 1/2) trig(x t) dt`` for nu > -1/2.

    `trig` is ``np.sin`` or ``np.cos``. The substitution t = 1 - u**p with
    p = 2 (nu >= 1/2) or p = 2 / (nu + 1/2) removes the endpoint
    singularity at t = 1.
    """
    if nu <= -0.5:
        raise DomainError(
            "the integral representation needs nu > -1/2, got {!r}".format(nu)
        )
    p = endpoint_exponent(nu)
    exponent = p * (nu + 0.5) - 1.0
    a = nu - 0.5

    def integrand(u):
        up = u ** p
        t = 1.0 - up
        values = p * u ** exponent * (2.0 - up) ** a * trig(x * t)
        if power:
            values = values * t ** power
        return values

    # one panel per half period of the oscillation
    panels = max(1, int(abs(x) / math.pi))
    breakpoints = [float(k) / panels for k in range(1, panels)]
    return gauss_kronrod(integrand, 0.0, 1.0, tol=tol, breakpoints=breakpoints)


def laplace_tail_bound(q, x, upper, scale=1.0):
    """
    Bound on ``scale * int_T^inf t**q exp(-x t) dt`` for T = `upper` >= 1,
    or ``inf`` when the bound does not apply yet (x T <= q).
    """
    if q <= 0:
        return scale * upper ** q * math.exp(-x * upper) / x
    if x * upper <= q:
        return float('inf')
    return scale * upper ** q * math.exp(-x * upper) / (x - q / upper)


def laplace_integral(nu, x, power=0, log_power=0, tol=None):
    """
    ``int_0^inf t**power log(1 + t**2)**log_power (1 + t**2)**(nu - 1/2)
    exp(-x t) dt`` for x > 0.

    The range is truncated at T = max(40 / x, 40), doubled until the
    closed-form tail bound falls below a tenth of the requested error. The
    bound uses log(1 + t**2) <= t and (1 + t**2)**a <= (2 t**2)**a for
    a >= 0 (or <= t**(2 a) for a < 0) on t >= 1; it is added to
    ``est_error``.
    """
    if x <= 0:
        raise DomainError("the Laplace integral needs x > 0, got {!r}".format(x))
    tol = constants.QUAD_TOL if tol is None else tol
    a = nu - 0.5

    def integrand(t):
        log1p = np.log1p(t * t)
        logs = a * log1p - x * t
        if power:
            logs = logs + power * np.log(np.where(t > 0, t, 1.0))
        values = np.exp(logs)
        if power:
            values = np.where(t > 0, values, 0.0)
        if log_power:
            values = values * log1p ** log_power
        return values

    q = power + log_power + 2 * a
    scale = 2.0 ** a if a > 0 else 1.0
    upper = max(40.0 / x, 40.0)
    peak = max(q, 0.0) / x
    while True:
        breakpoints = [s / x for s in (1.0, 4.0, 16.0)] + [1.0, peak]
        result = gauss_kronrod(
            integrand, 0.0, upper, tol=tol, breakpoints=breakpoints
        )
        tail = laplace_tail_bound(q, x, upper, scale)
        if tail <= 0.1 * tol * abs(result.value) or upper > 1e8:
            break
        upper *= 2
    return QuadResult(result.value, result.est_error + tail, result.nodes)
