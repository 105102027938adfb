from .bessel import bessel_j, bessel_j_zero, bessel_j_zeros, bessel_y  # noqa
from .exceptions import (  # noqa
    AccuracyError, BracketError, DomainError, PoleProximityError, StruveError
)
from .expansions import (  # noqa
    bessel_sandwich_h, euler_rayleigh_sums, hadamard_product_eval,
    improved_quotient_bound, j_series_h
)
from .grid import make_grid, parse_range  # noqa
from .inequalities import (  # noqa
    THEOREM_IDS, check_theorem1, check_theorem2, get_inequality, scan_region,
    verify
)
from .struve import (  # noqa
    normalized, struve_h, struve_h_prime, struve_k, struve_k_prime, struve_l
)
from .turan import (  # noqa
    laguerre_margin, turan_delta_h, turan_delta_k, turan_delta_l
)
from .zeros import struve_h_zero, struve_h_zeros  # noqa
