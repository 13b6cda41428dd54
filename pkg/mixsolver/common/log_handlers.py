"""
Log Handlers

This module contains utility functions to set up logging
consistently
"""
import logging
import sys

from mixsolver import config

FORMAT_STRING = "[%(asctime)s] [%(levelname)s] [%(module)s] %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S %z"


def init_logging(logger_name: str = "mixsolver", level=None) -> logging.Logger:
    """Set up logging for command line runs"""
    logger = logging.getLogger(logger_name)
    logger.propagate = False
    streams = [
        h for h in logger.handlers
        if isinstance(h, logging.StreamHandler) and not isinstance(h, logging.FileHandler)
    ]
    if not streams:
        logger.addHandler(logging.StreamHandler())
    for handler in streams:
        # follow sys.stderr when it has been swapped since the first call
        handler.setStream(sys.stderr)
    logger.setLevel(config.LOGGING_LEVEL if level is None else level)
    # Make all log formats consistent
    formatter = logging.Formatter(FORMAT_STRING, DATE_FORMAT)
    for handler in logger.handlers:
        handler.setFormatter(formatter)
    logger.debug("Logging handler established")
    return logger
