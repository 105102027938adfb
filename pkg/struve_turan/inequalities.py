"""
Grid checks of the Turan, Laguerre and monotonicity inequalities.

Every inequality is an ``Inequality`` subclass that turns a point
``(nu, x[, y])`` and an optional derivative order into a left and a right
hand side. The margin ``lhs - rhs`` is nonnegative exactly when the
inequality holds there; it is judged relative to ``scale``, the size of
the terms it was computed from.

``verify`` enforces the parameter region of the inequality and clips x
to its stated range. ``scan_region`` does neither and records failures
per point.
"""
import collections
import logging
import math

from . import constants
from .bessel import bessel_j_zero
from .exceptions import DomainError, StruveError
from .expansions import bessel_sandwich_h, improved_quotient_bound
from .grid import range_values
from .special import rgamma
from .struve import laplace_moment, normalized, struve_h, struve_k, struve_k_prime
from .turan import (
    gamma_ratio_bound, laguerre_parts, log_convexity_nu, log_convexity_x,
    turan_parts_h, turan_parts_k, turan_parts_l, turan_scale
)
from .zeros import struve_h_zero, struve_h_zeros, zero_lower_bound

log = logging.getLogger(__name__)

Evaluation = collections.namedtuple(
    'Evaluation', ['lhs', 'rhs', 'scale', 'method', 'est_error', 'margin']
)
Evaluation.__new__.__defaults__ = (None,)

Row = collections.namedtuple(
    'Row', [
        'nu', 'x', 'y', 'order', 'lhs', 'rhs', 'margin', 'scale', 'status',
        'method', 'est_error'
    ]
)

InequalityReport = collections.namedtuple(
    'InequalityReport', [
        'theorem_id', 'grid', 'min_margin', 'argmin', 'violations',
        'eval_budget', 'rows', 'errors', 'tolerance'
    ]
)


class Inequality(object):
    """ An inequality checked pointwise on a grid.

    Subclasses set the class attributes below and implement ``evaluate``.
    """

    theorem_id = None
    tolerance = constants.VERIFY_TOLERANCE

    nu_min = -math.inf
    nu_max = math.inf
    nu_min_open = False
    nu_max_open = False

    ratio_based = False
    two_argument = False
    orders = (None,)

    class OutsideRegion(DomainError):
        pass

    def __init__(self, tolerance=None, orders=None):
        if tolerance is not None:
            self.tolerance = tolerance
        if orders is not None:
            self.orders = tuple(orders)

    def region(self):
        lower = '(' if self.nu_min_open else '['
        upper = ')' if self.nu_max_open else ']'
        return "nu in {}{!r}, {!r}{}".format(
            lower, self.nu_min, self.nu_max, upper
        )

    def in_region(self, nu):
        if nu < self.nu_min or (self.nu_min_open and nu == self.nu_min):
            return False
        if nu > self.nu_max or (self.nu_max_open and nu == self.nu_max):
            return False
        return True

    def check_order(self, nu):
        if not self.in_region(nu):
            raise self.OutsideRegion(
                "{} needs {}, got nu={!r}".format(
                    self.theorem_id, self.region(), nu)
            )

    def x_limit(self, nu):
        """ ``(bound, inclusive)`` on x for the given order, or None.
        """
        return None

    def poles(self, nu, x_max):
        return ()

    def boundary_points(self, nu):
        return ()

    def admits(self, nu, x, y, order):
        return True

    def evaluate(self, nu, x, y=None, order=None):
        raise NotImplementedError()


def _ratio_error(numerator, denominator):
    ratio = numerator.value / denominator.value
    return ratio, (
        numerator.est_error + abs(ratio) * denominator.est_error
    ) / abs(denominator.value)


class StruveZeroPoles(object):
    """ Mixin excluding points close to the zeros of H_nu, |nu| <= 1/2.
    """
    ratio_based = True

    def poles(self, nu, x_max):
        if abs(nu) > 0.5:
            return ()
        count = 1
        while zero_lower_bound(count) <= x_max and count < constants.MAX_COMPUTED_ZEROS:
            count += 1
        return struve_h_zeros(nu, count).zeros


# Turan inequalities for H: Delta_nu = H_nu**2 - H_(nu-1) H_(nu+1)

class TuranH(Inequality):
    """ ``Delta_nu(x) >= rhs``. """

    def bound(self, nu, x, parts):
        return 0.0

    def evaluate(self, nu, x, y=None, order=None):
        parts = turan_parts_h(nu, x)
        bound = self.bound(nu, x, parts)
        delta = parts.delta
        return Evaluation(
            delta.value, bound, max(turan_scale(parts), abs(bound)),
            delta.method, delta.est_error
        )


class TuranNegativeOrder(TuranH):
    theorem_id = 'T1a'
    nu_min = -1.5
    nu_max = -0.5


class TuranFirstZero(TuranH):
    theorem_id = 'T1b'
    nu_min = -0.5
    nu_max = 0.5

    def x_limit(self, nu):
        return struve_h_zero(nu, 1), True

    def boundary_points(self, nu):
        # Delta = -H_(nu-1) H_(nu+1) there
        return (struve_h_zero(nu, 1),)


class TuranLaguerreType(TuranH):
    theorem_id = 'T1c_lag'
    nu_min = -1.5
    nu_max = -0.5

    def bound(self, nu, x, parts):
        return parts.here.value * parts.above.value / x


class TuranImproved(TuranH):
    theorem_id = 'T1c_new'
    nu_min = -1.5
    nu_max = -0.5
    nu_min_open = True

    def x_limit(self, nu):
        return struve_h_zero(nu + 1.0, 1), False

    def bound(self, nu, x, parts):
        return parts.here.value ** 2 / (2.0 * nu + 3.0)


class TuranHalfInteger(TuranH):
    theorem_id = 'T1_halfint'

    def region(self):
        return "nu in {-1/2, -3/2, ...}"

    def in_region(self, nu):
        return nu <= -0.5 and (nu - 0.5) == math.floor(nu - 0.5)

    def bound(self, nu, x, parts):
        return parts.here.value ** 2 / (1.0 - nu)


class TuranLargeOrder(TuranH):
    theorem_id = 'T1d'
    nu_min = 1.5

    def x_limit(self, nu):
        return math.pi, True


class TuranUpperBound(Inequality):
    """ ``Delta_nu(x) <= H_nu(x)**2 / (nu + 1/2)``. """

    theorem_id = 'T1e'
    nu_min = 1.5
    nu_min_open = True

    def x_limit(self, nu):
        return math.pi, False

    def evaluate(self, nu, x, y=None, order=None):
        parts = turan_parts_h(nu, x)
        bound = parts.here.value ** 2 / (nu + 0.5)
        delta = parts.delta
        return Evaluation(
            bound, delta.value, turan_scale(parts), delta.method, delta.est_error
        )


# K and calK_nu(x) = (2 / sqrt(pi)) int (1 + t**2)**(nu - 1/2) e**(-x t)

def _cal_k(nu, x):
    return normalized((constants.CAL_K, nu), x)


class CompleteMonotoneX(Inequality):
    """ ``(-1)**n d^n calK_nu / dx^n >= 0`` from the Laplace moments. """

    theorem_id = 'T2a_cm'
    nu_min = -0.5
    nu_min_open = True
    orders = (0, 1, 2, 3, 4)

    def evaluate(self, nu, x, y=None, order=0):
        moment = laplace_moment(nu, x, power=order)
        return Evaluation(
            moment.value, 0.0, max(1.0, abs(moment.value)), moment.method,
            moment.est_error
        )


def _log_derivative_k(nu, x):
    value = struve_k(nu, x)
    slope = struve_k_prime(nu, x)
    ratio, error = _ratio_error(slope, value)
    return x * ratio, x * error, value.method


class LogDerivativeBound(Inequality):
    """ ``x K'_nu(x) / K_nu(x) < nu``. """

    theorem_id = 'T2a_E1'
    nu_min = -0.5
    nu_min_open = True
    ratio_based = True

    def evaluate(self, nu, x, y=None, order=None):
        ratio, error, method = _log_derivative_k(nu, x)
        return Evaluation(nu, ratio, max(1.0, abs(ratio), abs(nu)), method, error)


class CompleteMonotoneNu(Inequality):
    """
    ``d^m calK_nu / dnu^m >= 0`` from the log-kernel moments for m >= 1;
    order 0 is the midpoint log-convexity
    ``calK_(nu-d) calK_(nu+d) >= calK_nu**2`` with d = ``LOG_CONVEXITY_STEP``.
    """

    theorem_id = 'T2b_cm'
    nu_min = -0.5
    nu_min_open = True
    orders = (0, 1, 2, 3)

    def admits(self, nu, x, y, order):
        return order != 0 or nu - constants.LOG_CONVEXITY_STEP > -0.5

    def evaluate(self, nu, x, y=None, order=0):
        if order == 0:
            step = constants.LOG_CONVEXITY_STEP
            left = _cal_k(nu - step, x)
            right = _cal_k(nu + step, x)
            middle = _cal_k(nu, x)
            lhs = left.value * right.value
            rhs = middle.value ** 2
            return Evaluation(
                lhs, rhs, max(1.0, lhs, rhs), middle.method,
                left.est_error * right.value + right.est_error * left.value
                + 2.0 * middle.value * middle.est_error
            )
        moment = laplace_moment(nu, x, log_power=order)
        return Evaluation(
            moment.value, 0.0, max(1.0, abs(moment.value)), moment.method,
            moment.est_error
        )


class TuranK(Inequality):
    """ ``Theta_nu(x) <= rhs`` for Theta_nu = K_nu**2 - K_(nu-1) K_(nu+1). """

    nu_min = -0.5
    nu_min_open = True

    def bound(self, nu, x, parts):
        raise NotImplementedError()

    def evaluate(self, nu, x, y=None, order=None):
        parts = turan_parts_k(nu, x)
        bound = self.bound(nu, x, parts)
        theta = parts.delta
        return Evaluation(
            bound, theta.value, max(turan_scale(parts), abs(bound)),
            theta.method, theta.est_error
        )


class TuranKUpperBound(TuranK):
    theorem_id = 'T2b_T1'
    nu_min = 0.5

    def bound(self, nu, x, parts):
        return parts.here.value ** 2 / (nu + 0.5)


class TuranKProduct(TuranK):
    theorem_id = 'T2d_turanK'

    def bound(self, nu, x, parts):
        return 2.0 / x * parts.here.value * parts.above.value


def _binomial(n, k):
    return math.factorial(n) // (math.factorial(k) * math.factorial(n - k))


class CompleteMonotoneK(Inequality):
    """
    ``(-1)**n d^n K_nu / dx^n >= 0`` for -1/2 < nu <= 0, from
    K_nu = x**nu calK_nu / (2**nu Gamma(nu + 1/2)) by the Leibniz rule.
    """

    theorem_id = 'T2c_cm'
    nu_min = -0.5
    nu_max = 0.0
    nu_min_open = True
    orders = (0, 1, 2, 3, 4)

    def evaluate(self, nu, x, y=None, order=0):
        prefactor = rgamma(nu + 0.5) * 2.0 ** -nu
        terms = []
        error = 0.0
        rising = 1.0
        for k in range(order + 1):
            # (-1)**k d^k x**nu / dx^k = (-nu)_k x**(nu - k)
            moment = laplace_moment(nu, x, power=order - k)
            weight = _binomial(order, k) * rising * x ** (nu - k)
            terms.append(weight * moment.value)
            error += abs(weight) * moment.est_error
            rising *= k - nu
        value = prefactor * math.fsum(terms)
        return Evaluation(
            value, 0.0, max(1.0, abs(value)), constants.INTEGRAL,
            prefactor * error
        )


class LogDerivativeIncreasing(Inequality):
    """ ``g(x + h) >= g(x)`` for g = x K'_nu / K_nu, h = ``MONOTONE_STEP``. """

    theorem_id = 'T2d_mono'
    nu_min = 0.5
    nu_min_open = True
    ratio_based = True

    def evaluate(self, nu, x, y=None, order=None):
        ahead, ahead_error, method = _log_derivative_k(
            nu, x + constants.MONOTONE_STEP
        )
        here, here_error, _ = _log_derivative_k(nu, x)
        return Evaluation(
            ahead, here, max(1.0, abs(ahead), abs(here)), method,
            ahead_error + here_error
        )


class GammaRatioBound(Inequality):
    """ ``calK_nu(x) < Gamma(-nu) / Gamma(1/2 - nu)``. """

    theorem_id = 'T2e_R1'
    nu_min = -0.5
    nu_max = 0.0
    nu_min_open = True
    nu_max_open = True

    def evaluate(self, nu, x, y=None, order=None):
        value = _cal_k(nu, x)
        bound = gamma_ratio_bound(nu)
        return Evaluation(
            bound, value.value, max(1.0, bound), value.method, value.est_error
        )


class SuperAdditive(Inequality):
    """ ``f(x + y) >= f(x) f(y)`` for f = calK_nu Gamma(1/2 - nu) / Gamma(-nu). """

    theorem_id = 'T2f_R2'
    nu_min = -0.5
    nu_max = 0.0
    nu_min_open = True
    nu_max_open = True
    two_argument = True

    def evaluate(self, nu, x, y=None, order=None):
        scale = 1.0 / gamma_ratio_bound(nu)
        joint = _cal_k(nu, x + y)
        first = _cal_k(nu, x)
        second = _cal_k(nu, y)
        lhs = joint.value
        rhs = scale * first.value * second.value
        error = joint.est_error + scale * (
            first.est_error * second.value + second.est_error * first.value
        )
        return Evaluation(lhs, rhs, max(1.0, lhs, rhs), joint.method, error)


def _chebyshev_terms(nu, x):
    # calK_(1/2) calK_(2nu-1/2) and calK_(nu-1) calK_(nu+1)
    half = _cal_k(0.5, x)
    product = _cal_k(2.0 * nu - 0.5, x)
    lower = _cal_k(nu - 1.0, x)
    upper = _cal_k(nu + 1.0, x)
    same = half.value * product.value
    split = lower.value * upper.value
    error = (
        half.est_error * product.value + product.est_error * half.value
        + lower.est_error * upper.value + upper.est_error * lower.value
    )
    return same, split, error


class ChebyshevProduct(Inequality):
    """ ``calK_(nu-1) calK_(nu+1) < calK_(1/2) calK_(2nu-1/2)``. """

    theorem_id = 'T2g_R3'
    nu_min = 1.5
    nu_min_open = True

    def evaluate(self, nu, x, y=None, order=None):
        same, split, error = _chebyshev_terms(nu, x)
        return Evaluation(
            same, split, max(1.0, same, split), constants.INTEGRAL, error
        )


class ChebyshevProductReversed(Inequality):
    """ ``calK_(nu-1) calK_(nu+1) > calK_(1/2) calK_(2nu-1/2)``. """

    theorem_id = 'T2g_R3_rev'
    nu_min = 0.5
    nu_max = 1.5
    nu_min_open = True
    nu_max_open = True

    def evaluate(self, nu, x, y=None, order=None):
        same, split, error = _chebyshev_terms(nu, x)
        return Evaluation(
            split, same, max(1.0, same, split), constants.INTEGRAL, error
        )


# Laguerre, modified Turan and the bounds of H by J

class LaguerreH(Inequality):
    """ ``[calH^(m)]**2 >= calH^(m-1) calH^(m+1)``; the order column is m. """

    theorem_id = 'LAG_m'
    tolerance = 1e-10
    nu_min = -0.5
    nu_max = 0.5
    orders = (1, 2, 3)

    def x_limit(self, nu):
        return constants.LAGUERRE_MAX_X, True

    def evaluate(self, nu, x, y=None, order=1):
        parts = laguerre_parts(nu, order, x)
        lhs = parts.middle ** 2
        rhs = parts.lower * parts.upper
        return Evaluation(
            lhs, rhs, max(1.0, lhs, abs(rhs)), constants.SERIES, 0.0, parts.margin
        )


class TuranL(Inequality):
    """ ``L_nu(x)**2 - L_(nu-1)(x) L_(nu+1)(x) >= 0``. """

    theorem_id = 'TURAN_L'
    tolerance = 1e-12
    nu_min = -1.5
    nu_max = -0.5

    def x_limit(self, nu):
        return constants.L_MAX_X, True

    def evaluate(self, nu, x, y=None, order=None):
        parts = turan_parts_l(nu, x)
        delta = parts.delta
        return Evaluation(
            delta.value, 0.0, turan_scale(parts), delta.method, delta.est_error
        )


class BesselSandwich(Inequality):
    """
    ``c x J_nu < H_nu < c x J_nu j**2 / (j**2 - x**2)`` below the first
    zero j of J_nu. Order 0 is the lower bound, order 1 the upper one.
    """

    theorem_id = 'BOUND_sandwich'
    nu_min = -0.5
    nu_max = 0.5
    nu_min_open = True
    nu_max_open = True
    orders = (0, 1)

    def x_limit(self, nu):
        return bessel_j_zero(nu, 1), False

    def evaluate(self, nu, x, y=None, order=0):
        value = struve_h(nu, x)
        sandwich = bessel_sandwich_h(nu, x)
        if order == 0:
            lhs, rhs = value.value, sandwich.lower
        else:
            lhs, rhs = sandwich.upper, value.value
        return Evaluation(
            lhs, rhs, max(1.0, abs(value.value)), value.method, value.est_error
        )


class QuotientBound(StruveZeroPoles, Inequality):
    """ ``x H_(nu-1)(x) / H_nu(x) <= improved_quotient_bound(nu, x)``. """

    theorem_id = 'BOUND_quotient'
    nu_min = -0.5
    nu_max = 0.5

    def x_limit(self, nu):
        return struve_h_zero(nu, 1), False

    def evaluate(self, nu, x, y=None, order=None):
        ratio, error = _ratio_error(struve_h(nu - 1.0, x), struve_h(nu, x))
        bound = improved_quotient_bound(nu, x)
        return Evaluation(
            bound, x * ratio, max(1.0, abs(bound), abs(x * ratio)),
            constants.SERIES, x * error
        )


# log-convexity with the step taken from the y grid

class LogConvexX(Inequality):
    """ ``calK_nu(x - y) calK_nu(x + y) >= calK_nu(x)**2``. """

    theorem_id = 'LC_calK_x'
    nu_min = -0.5
    nu_min_open = True
    two_argument = True

    def admits(self, nu, x, y, order):
        return 0 < y < x

    def evaluate(self, nu, x, y=None, order=None):
        parts = log_convexity_x(nu, x, y)
        return Evaluation(
            parts.product, parts.square, max(1.0, parts.product, parts.square),
            parts.method, 0.0
        )


class LogConvexNu(Inequality):
    """ ``f_(nu-y)(x) f_(nu+y)(x) >= f_nu(x)**2`` for a normalized f. """

    two_argument = True
    kind = None
    order_floor = None

    def admits(self, nu, x, y, order):
        return y > 0 and nu - y > self.order_floor

    def evaluate(self, nu, x, y=None, order=None):
        parts = log_convexity_nu(self.kind, nu, x, y)
        return Evaluation(
            parts.product, parts.square, max(1.0, parts.product, parts.square),
            parts.method, 0.0
        )


class LogConvexKNu(LogConvexNu):
    theorem_id = 'LC_calK_nu'
    kind = constants.CAL_K
    order_floor = -0.5
    nu_min = -0.5
    nu_min_open = True


class LogConvexHNu(LogConvexNu):
    theorem_id = 'LC_bbH_nu'
    kind = constants.BB_H
    order_floor = 0.5
    nu_min = 0.5
    nu_min_open = True

    def x_limit(self, nu):
        return math.pi, False


INEQUALITIES = collections.OrderedDict(
    (cls.theorem_id, cls) for cls in (
        TuranNegativeOrder, TuranFirstZero, TuranLaguerreType, TuranImproved,
        TuranLargeOrder, TuranUpperBound, TuranHalfInteger,
        CompleteMonotoneX, LogDerivativeBound, CompleteMonotoneNu,
        TuranKUpperBound, CompleteMonotoneK, LogDerivativeIncreasing,
        TuranKProduct, GammaRatioBound, SuperAdditive, ChebyshevProduct,
        ChebyshevProductReversed, LaguerreH, TuranL, BesselSandwich,
        QuotientBound, LogConvexX, LogConvexKNu, LogConvexHNu,
    )
)

THEOREM_IDS = tuple(INEQUALITIES)

THEOREM1_PARTS = ('a', 'b', 'c_lag', 'c_new', 'd', 'e')
THEOREM2_PARTS = (
    'a_cm', 'a_E1', 'b_cm', 'b_T1', 'c_cm', 'd_mono', 'd_turanK', 'e_R1',
    'f_R2', 'g_R3', 'g_R3_rev'
)


def get_inequality(theorem_id, tolerance=None, orders=None):
    try:
        cls = INEQUALITIES[theorem_id]
    except KeyError:
        raise DomainError(
            "unknown theorem id {!r}, expected one of {}".format(
                theorem_id, ", ".join(THEOREM_IDS))
        )
    return cls(tolerance=tolerance, orders=orders)


def _excluded(nu, x, y, order):
    return Row(
        nu, x, y, order, None, None, None, None, constants.EXCLUDED, None, None
    )


def _evaluate_row(inequality, nu, x, y, order):
    try:
        result = inequality.evaluate(nu, x, y, order)
    except (StruveError, ArithmeticError, ValueError) as exc:
        log.info(
            "%s failed at nu=%r x=%r y=%r: %s",
            inequality.theorem_id, nu, x, y, exc
        )
        return Row(nu, x, y, order, None, None, None, None, constants.ERROR,
                   None, None)
    margin = result.margin
    if margin is None:
        margin = result.lhs - result.rhs
    if math.isnan(margin):
        status = constants.ERROR
    elif margin / result.scale < -inequality.tolerance:
        status = constants.VIOLATION
    else:
        status = constants.OK
    return Row(
        nu, x, y, order, result.lhs, result.rhs, margin, result.scale, status,
        result.method, result.est_error
    )


def _beyond(limit, x):
    if limit is None:
        return False
    bound, inclusive = limit
    return x > bound or (x == bound and not inclusive)


def _near(points, x, radius):
    return any(abs(x - point) <= radius for point in points)


def _guard(inequality, nus, xs, ys):
    for nu in nus:
        inequality.check_order(nu)
    if xs[0] < 0:
        raise inequality.OutsideRegion(
            "{} is checked for x > 0, got x={!r}".format(
                inequality.theorem_id, xs[0])
        )
    if ys[0] is not None and ys[0] < 0:
        raise inequality.OutsideRegion(
            "{} is checked for y > 0, got y={!r}".format(
                inequality.theorem_id, ys[0])
        )


def evaluate_grid(inequality, grid, clip=True):
    """
    Evaluate `inequality` on every point of `grid` and reduce the rows, in
    grid order, to an ``InequalityReport``.

    With `clip`, the nu values must lie in the region of the inequality
    and x values beyond its stated range are reported as excluded.
    Points within ``grid.exclusion_radius`` of x = 0, and of a pole for
    ratio-based inequalities, are always excluded.
    """
    if inequality.two_argument and grid.y_range is None:
        raise DomainError(
            "{} compares two arguments and needs a y grid".format(
                inequality.theorem_id)
        )
    nus = range_values(grid.nu_range)
    xs = range_values(grid.x_range)
    ys = [None]
    if inequality.two_argument:
        ys = range_values(grid.y_range)
    if clip:
        _guard(inequality, nus, xs, ys)

    radius = grid.exclusion_radius
    rows = []
    for nu in nus:
        limit = inequality.x_limit(nu) if clip else None
        poles = ()
        if inequality.ratio_based:
            try:
                poles = inequality.poles(nu, xs[-1] + radius)
            except StruveError as exc:
                log.info("no poles for nu=%r: %s", nu, exc)
        points = [(x, y) for x in xs for y in ys]
        if clip:
            points.extend((x, None) for x in inequality.boundary_points(nu))
        for x, y in points:
            skip = (
                abs(x) <= radius or _beyond(limit, x) or _near(poles, x, radius)
            )
            for order in inequality.orders:
                if skip or not inequality.admits(nu, x, y, order):
                    rows.append(_excluded(nu, x, y, order))
                else:
                    rows.append(_evaluate_row(inequality, nu, x, y, order))
    return _report(inequality, grid, rows)


def _report(inequality, grid, rows):
    evaluated = [
        row for row in rows
        if row.status in (constants.OK, constants.VIOLATION)
    ]
    violations = [row for row in rows if row.status == constants.VIOLATION]
    errors = sum(1 for row in rows if row.status == constants.ERROR)
    budget = sum(1 for row in rows if row.status != constants.EXCLUDED)

    min_margin = argmin = None
    if evaluated:
        lowest = min(evaluated, key=lambda row: row.margin / row.scale)
        min_margin = lowest.margin / lowest.scale
        argmin = (lowest.nu, lowest.x)
        if lowest.y is not None:
            argmin += (lowest.y,)
    if violations:
        log.warning(
            "%s: %d violations, min margin %.3g at %r",
            inequality.theorem_id, len(violations), min_margin, argmin
        )
    return InequalityReport(
        inequality.theorem_id, grid, min_margin, argmin, violations, budget,
        rows, errors, inequality.tolerance
    )


def verify(theorem_id, grid, tolerance=None, orders=None):
    """
    Check an inequality on a grid inside its stated region.

    :raises Inequality.OutsideRegion: when an order of the grid, or a
        negative argument, lies outside that region.
    """
    inequality = get_inequality(theorem_id, tolerance, orders)
    return evaluate_grid(inequality, grid)


def scan_region(theorem_id, grid, tolerance=None, orders=None):
    """
    Evaluate an inequality anywhere. Negative margins are flagged as
    violations and evaluation failures recorded per point; nothing is
    raised for the grid itself.
    """
    inequality = get_inequality(theorem_id, tolerance, orders)
    return evaluate_grid(inequality, grid, clip=False)


def check_theorem1(part, grid, tolerance=None):
    if part not in THEOREM1_PARTS:
        raise DomainError(
            "unknown part {!r} of the first theorem, expected one of {}".format(
                part, ", ".join(THEOREM1_PARTS))
        )
    return verify('T1' + part, grid, tolerance)


def check_theorem2(part, grid, tolerance=None, orders=None):
    if part not in THEOREM2_PARTS:
        raise DomainError(
            "unknown part {!r} of the second theorem, expected one of {}".format(
                part, ", ".join(THEOREM2_PARTS))
        )
    return verify('T2' + part, grid, tolerance, orders)
