import logging

import numpy as np
import sympy

from . import __version__


def setup_logging(log_level=logging.INFO):
    """
    Attaches a stream handler to the ``uqg`` logger and sets its level.

    :param log_level: The log level to use.

    :returns: the ``uqg`` logger.
    """
    logger = logging.getLogger("uqg")

    # Add stream handler if it does not already exist.
    if not logger.hasHandlers() and not any(
        (isinstance(h, logging.StreamHandler) for h in logger.handlers)
    ):
        handler = logging.StreamHandler()
        formatter = logging.Formatter("%(asctime)s %(levelname)s %(message)s")
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    # Set log level
    logger.setLevel(log_level)

    # Log version info
    logger.info("Using uqg {}.".format(__version__))
    logger.debug("Using NumPy {}, SymPy {}.".format(np.__version__, sympy.__version__))

    return logger
