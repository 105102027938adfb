"""
Parameter grids for the inequality checks.

A range is written ``lo:hi:step``. It always contains `lo` and contains
`hi` when ``(hi - lo) / step`` is an integer up to ``GRID_SNAP``. Grid
values are ``lo + i * step`` rounded to 12 decimals, so repeated runs and
different platforms see the same points.
"""
import collections
import math

from . import constants
from .exceptions import DomainError

GridRange = collections.namedtuple('GridRange', ['lo', 'hi', 'step'])

GridSpec = collections.namedtuple(
    'GridSpec', ['nu_range', 'x_range', 'exclusion_radius', 'y_range']
)
GridSpec.__new__.__defaults__ = (constants.GRID_EXCLUSION, None)


def make_range(lo, hi, step):
    lo, hi, step = float(lo), float(hi), float(step)
    for name, value in (('lo', lo), ('hi', hi), ('step', step)):
        if not math.isfinite(value):
            raise DomainError("range {} must be finite, got {!r}".format(name, value))
    if step <= 0:
        raise DomainError("range step must be positive, got {!r}".format(step))
    if hi < lo:
        raise DomainError("empty range {!r}:{!r}".format(lo, hi))
    return GridRange(lo, hi, step)


def parse_range(text):
    """ Parse ``lo:hi:step``; a bare number is the one-point range.
    """
    parts = text.split(':')
    try:
        if len(parts) == 1:
            value = float(parts[0])
            return make_range(value, value, 1.0)
        if len(parts) == 3:
            return make_range(*(float(part) for part in parts))
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
    raise DomainError(
        "expected a range lo:hi:step, got {!r}".format(text)
    )


def range_values(grid_range):
    lo, hi, step = grid_range
    quotient = (hi - lo) / step
    nearest = round(quotient)
    if abs(quotient - nearest) <= constants.GRID_SNAP * max(1.0, quotient):
        count = int(nearest) + 1
    else:
        count = int(math.floor(quotient)) + 1
    values = [round(lo + i * step, 12) for i in range(count)]
    if count > 1 and abs(values[-1] - hi) <= constants.GRID_SNAP * max(1.0, abs(hi)):
        values[-1] = hi
    return values


def make_grid(nu_range, x_range, exclusion_radius=None, y_range=None):
    """ Build a GridSpec from ranges given as strings or triples.
    """
    def coerce(value):
        if value is None or isinstance(value, GridRange):
            return value
        if isinstance(value, str):
            return parse_range(value)
        return make_range(*value)

    radius = constants.GRID_EXCLUSION if exclusion_radius is None else exclusion_radius
    if radius < 0:
        raise DomainError(
            "exclusion radius must be nonnegative, got {!r}".format(radius)
        )
    return GridSpec(coerce(nu_range), coerce(x_range), float(radius), coerce(y_range))
