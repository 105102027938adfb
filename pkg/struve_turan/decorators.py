import logging
import math
import numbers

import six
import wrapt

from .exceptions import AccuracyError, DomainError

log = logging.getLogger(__name__)


def _check_real(name, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        return
    if not math.isfinite(value):
        raise DomainError("{} must be finite, got {!r}".format(name, value))


def real_arguments(wrapped=None, names=None):
    """
    Decorator rejecting NaN and infinite real arguments with a
    ``DomainError`` before the wrapped evaluator runs.

    :param names: optional tuple of argument names used in the error
        message for positional arguments. Keyword arguments are reported
        by their own name.
    """
    if wrapped is None:
        return lambda func: real_arguments(func, names=names)

    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        for index, value in enumerate(args):
            if names and index < len(names):
                name = names[index]
            else:
                name = "argument {}".format(index)
            _check_real(name, value)
        for name, value in kwargs.items():
            _check_real(name, value)
        return wrapped(*args, **kwargs)

    return wrapper(wrapped)


def fallback(alternative, retry_for=AccuracyError, applies=None):
    """
    Decorator to declare that an evaluation may be retried with another
    representation.

    :param alternative: callable accepting the same arguments as the
        wrapped function. It is called when the wrapped function raises
        one of the `retry_for` exceptions.

    :param retry_for: An exception class or tuple of exception classes.
        Defaults to ``AccuracyError``.

    :param applies: optional predicate called with the wrapped function's
        arguments. When it returns false the original exception propagates
        unchanged.

    If the alternative fails as well, its exception is raised from the
    original failure.
    """
    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        try:
            return wrapped(*args, **kwargs)
        except retry_for as exc:
            if applies is not None and not applies(*args, **kwargs):
                raise
            log.debug(
                "%s failed (%s); retrying with %s",
                wrapped.__name__, exc, alternative.__name__
            )
            try:
                return alternative(*args, **kwargs)
            except Exception as alt_exc:
                six.raise_from(alt_exc, exc)

    return wrapper
