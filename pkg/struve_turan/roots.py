"""
Bracketed root polishing and the append-only cache that holds zero tables.
"""
import logging
import threading

from . import constants
from .exceptions import BracketError

log = logging.getLogger(__name__)


def _sign(value):
    return (value > 0) - (value < 0)


def bisect(func, lo, hi, width, f_lo=None):
    """ Shrink a verified sign-change bracket [lo, hi] below `width`.
    """
    f_lo = func(lo) if f_lo is None else f_lo
    f_hi = func(hi)
    if _sign(f_lo) * _sign(f_hi) > 0:
        raise BracketError(
            "no sign change on [{!r}, {!r}] ({!r}, {!r})".format(
                lo, hi, f_lo, f_hi)
        )
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        f_mid = func(mid)
        if f_mid == 0:
            return mid, mid
        if _sign(f_mid) == _sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return lo, hi


def find_root(func, derivative, lo, hi):
    """
    Root of `func` inside the sign-change bracket [lo, hi]: bisection down
    to ``BISECTION_WIDTH`` followed by Newton steps kept inside the
    bracket. After ``NEWTON_MAX_ITER`` steps the remaining work is plain
    bisection.
    """
    lo, hi = bisect(func, lo, hi, constants.BISECTION_WIDTH)
    if lo == hi:
        return lo
    f_lo = func(lo)
    x = 0.5 * (lo + hi)
    for _ in range(constants.NEWTON_MAX_ITER):
        value = func(x)
        if value == 0:
            return x
        if _sign(value) == _sign(f_lo):
            lo, f_lo = x, value
        else:
            hi = x
        slope = derivative(x)
        step = value / slope if slope else None
        if step is None or not lo <= x - step <= hi:
            x = 0.5 * (lo + hi)
            continue
        x -= step
        if abs(step) <= constants.ZERO_TOL * max(1.0, abs(x)):
            return x
    log.debug("Newton did not settle on [%r, %r]; bisecting", lo, hi)
    lo, hi = bisect(func, lo, hi, constants.ZERO_TOL * max(1.0, abs(hi)), f_lo)
    return 0.5 * (lo + hi)


class ZeroCache(object):
    """ Append-only per-order lists of zeros with a single writer.

    `extend` is called with the order, the current list and the requested
    count, and must return the list grown to at least that many entries.
    Readers get immutable tuples.
    """

    def __init__(self, extend):
        self._extend = extend
        self._tables = {}
        self._lock = threading.Lock()

    def get(self, nu, count):
        key = float(nu)
        table = self._tables.get(key)
        if table is not None and len(table) >= count:
            return table[:count]
        with self._lock:
            table = self._tables.get(key, ())
            if len(table) < count:
                table = tuple(self._extend(key, list(table), count))
                self._tables[key] = table
        return table[:count]

    def clear(self):
        with self._lock:
            self._tables.clear()
