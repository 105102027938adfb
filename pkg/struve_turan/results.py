import collections


EvalResult = collections.namedtuple(
    'EvalResult', ['value', 'method', 'est_error', 'work']
)
EvalResult.__doc__ = """ A function value with the representation actually used,
an absolute error estimate and a work counter (series terms or quadrature
nodes).
"""

NormalizedId = collections.namedtuple('NormalizedId', ['kind', 'nu'])

TruncatedExpansion = collections.namedtuple(
    'TruncatedExpansion',
    ['partial', 'n_terms', 'tail_bound', 'corrected', 'corrected_bound']
)
TruncatedExpansion.__new__.__defaults__ = (None, None)

BesselZeroTable = collections.namedtuple(
    'BesselZeroTable', ['nu', 'zeros', 'count']
)

StruveZeroTable = collections.namedtuple(
    'StruveZeroTable', ['nu', 'zeros', 'multiplicity', 'bracket']
)
