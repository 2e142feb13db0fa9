import functools
import logging
from enum import IntEnum

logger = logging.getLogger("uqg")


class DebugLevel(IntEnum):
    NONE = 0
    LOW = 10
    MEDIUM = 20
    HIGH = 30
    VERYHIGH = 40


def debug_check(level):
    """
    Run the decorated method only when the owner's debug level permits it.

    The owner (first argument) provides ``_debug_check_level``, either an int
    compared against ``level`` or a callable ``filter_(level, qualname)``, and
    ``_debug_check_options``, a dict of extra keyword arguments per qualname.
    A skipped check returns None.
    """

    def wrap(func):
        @functools.wraps(func)
        def func_wrapper(*args, **kwargs):
            this = args[0]
            filter_ = this._debug_check_level
            if callable(filter_):
                do_check = bool(filter_(level, func.__qualname__))
            else:
                do_check = filter_ >= level

            if not do_check:
                return None

            logger.info("Starting debug check '{}'".format(func.__qualname__))
            extra_options = this._debug_check_options.get(func.__qualname__, {})
            ret = func(*args, **kwargs, **extra_options)
            logger.info("Finished debug check '{}'".format(func.__qualname__))
            return ret

        return func_wrapper

    return wrap
