class StruveError(Exception):
    """ Base class for every error raised by this package.
    """


class DomainError(StruveError, ValueError):
    """ An argument lies outside the domain of the requested representation.
    """


class PoleProximityError(DomainError):

    def __init__(self, pole, x):
        super(PoleProximityError, self).__init__(
            "x={!r} is within the exclusion radius of the pole at {!r}".format(
                x, pole)
        )
        self.pole = pole
        self.x = x


class AccuracyError(StruveError, ArithmeticError):
    """ The requested accuracy is out of reach for a representation.

    Carries the best available estimate so a caller may either use it or
    fall back to another representation.
    """
    def __init__(self, message, estimate=None, est_error=None):
        super(AccuracyError, self).__init__(message)
        self.estimate = estimate
        self.est_error = est_error


class BracketError(StruveError):
    """ A root bracket failed its sign-change verification.
    """
