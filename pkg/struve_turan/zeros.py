"""
Positive zeros of H_nu for |nu| <= 1/2.

For |nu| < 1/2 every zero is simple and lies strictly between consecutive
zeros of J_nu, so each one is found by bisection and Newton on
[j_(nu,n), j_(nu,n+1)]. At nu = -1/2 the zeros are n pi; at nu = 1/2 they
are 2 n pi and double.
"""
import logging
import math

from . import constants
from .bessel import bessel_j_zeros
from .decorators import real_arguments
from .exceptions import DomainError
from .results import StruveZeroTable, TruncatedExpansion
from .roots import ZeroCache, find_root
from .struve import struve_h, struve_h_prime

log = logging.getLogger(__name__)


def zero_lower_bound(n):
    """ Lower envelope (n - 1/4) pi - 1 < j_(nu,n) < h_(nu,n), |nu| <= 1/2.
    """
    return (n - 0.25) * math.pi - 1.0


def inverse_power_tail(n_terms, power):
    """ Bound on sum_(n > n_terms) zero_lower_bound(n)**(-power), power > 1.
    """
    lead = zero_lower_bound(n_terms)
    return 1.0 / ((power - 1) * math.pi * lead ** (power - 1))


def max_multiplicity(nu):
    return 2 if nu == 0.5 else 1


def _check_order(nu):
    if abs(nu) > 0.5:
        raise DomainError(
            "zeros of H_nu are only known to be real for |nu| <= 1/2, got {!r}"
            .format(nu)
        )


def _extend_h_zeros(nu, zeros, count):

    def func(x):
        return struve_h(nu, x).value

    def derivative(x):
        return struve_h_prime(nu, x).value

    bessel = bessel_j_zeros(nu, count + 1).zeros
    while len(zeros) < count:
        n = len(zeros)
        zeros.append(find_root(func, derivative, bessel[n], bessel[n + 1]))
    log.debug("H_%r zero table extended to %d entries", nu, len(zeros))
    return zeros


_struve_zero_cache = ZeroCache(_extend_h_zeros)


@real_arguments(names=('nu',))
def struve_h_zeros(nu, count):
    """
    Table of the first `count` positive zeros of H_nu with multiplicities
    and the Bessel-zero bracket of each zero.

    At nu = 1/2 the bracket of the double zero 2 n pi is
    (j_(1/2,2n-1), j_(1/2,2n+1)).
    """
    _check_order(nu)
    count = int(count)
    if count < 1:
        raise DomainError("count must be positive, got {!r}".format(count))

    if nu == -0.5:
        zeros = tuple(n * math.pi for n in range(1, count + 1))
        multiplicity = (1,) * count
        bracket = tuple(
            ((n - 0.5) * math.pi, (n + 0.5) * math.pi) for n in range(1, count + 1)
        )
    elif nu == 0.5:
        zeros = tuple(2 * n * math.pi for n in range(1, count + 1))
        multiplicity = (2,) * count
        bracket = tuple(
            ((2 * n - 1) * math.pi, (2 * n + 1) * math.pi)
            for n in range(1, count + 1)
        )
    else:
        if count > constants.MAX_COMPUTED_ZEROS:
            raise DomainError(
                "at most {} zeros of H_{!r} can be computed below X_MAX".format(
                    constants.MAX_COMPUTED_ZEROS, nu)
            )
        zeros = _struve_zero_cache.get(nu, count)
        bessel = bessel_j_zeros(nu, count + 1).zeros
        multiplicity = (1,) * count
        bracket = tuple(zip(bessel[:-1], bessel[1:]))
    return StruveZeroTable(float(nu), zeros, multiplicity, bracket)


def struve_h_zero(nu, n):
    """ The n-th positive zero h_(nu,n) of H_nu, |nu| <= 1/2.
    """
    if n < 1 or n != int(n):
        raise DomainError("n must be a positive integer, got {!r}".format(n))
    return struve_h_zeros(nu, int(n)).zeros[int(n) - 1]


def retained_zeros(nu, n_terms):
    """
    The zero table used by the expansions: `n_terms` zeros, limited to
    ``MAX_COMPUTED_ZEROS`` unless a closed form is known.
    """
    _check_order(nu)
    n_terms = int(n_terms)
    if abs(nu) != 0.5 and n_terms > constants.MAX_COMPUTED_ZEROS:
        log.warning(
            "H_%r: using %d zeros instead of %d",
            nu, constants.MAX_COMPUTED_ZEROS, n_terms
        )
        n_terms = constants.MAX_COMPUTED_ZEROS
    return struve_h_zeros(nu, n_terms)


@real_arguments(names=('nu',))
def zero_reciprocal_square_sum(nu, n_terms):
    """
    ``sum_(n <= N) multiplicity / h_(nu,n)**2`` with a bound on the omitted
    tail from the zero envelope. The full sum equals 1 / (3 (2 nu + 3)).
    """
    table = retained_zeros(nu, n_terms)
    partial = math.fsum(
        m / (h * h) for h, m in zip(table.zeros, table.multiplicity)
    )
    n = len(table.zeros)
    tail_bound = max_multiplicity(nu) * inverse_power_tail(n, 2)
    return TruncatedExpansion(partial, n, tail_bound)
