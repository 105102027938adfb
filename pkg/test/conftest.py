import math

import pytest
from mock import patch

from struve_turan import bessel, constants, zeros
from struve_turan.grid import make_grid


@pytest.fixture
def fresh_zero_caches():
    bessel._bessel_zero_cache.clear()
    zeros._struve_zero_cache.clear()
    yield
    bessel._bessel_zero_cache.clear()
    zeros._struve_zero_cache.clear()


@pytest.fixture
def few_computed_zeros():
    limit = 5
    with patch.object(constants, 'MAX_COMPUTED_ZEROS', new=limit):
        yield limit


@pytest.fixture
def few_panels():
    limit = 2
    with patch.object(constants, 'QUAD_PANEL_LIMIT', new=limit):
        yield limit


@pytest.fixture(scope='session')
def closed_forms():
    """ Elementary forms of the half-integer order functions. """

    def root(x):
        return math.sqrt(2.0 / (math.pi * x))

    return {
        'H_-1/2': (-0.5, lambda x: root(x) * math.sin(x)),
        'H_1/2': (0.5, lambda x: root(x) * (1.0 - math.cos(x))),
        'H_-3/2': (
            -1.5, lambda x: -root(x) * (math.sin(x) / x - math.cos(x))
        ),
    }


@pytest.fixture
def small_grid():
    return make_grid('-1.5:-0.5:0.5', '0.5:3:0.5')
