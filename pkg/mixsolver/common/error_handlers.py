"""
Module: error_handlers

Maps exceptions raised while serving a command to process exit codes.
Handlers are registered per exception class; the most specific registered
class in the exception's MRO wins.
"""
import logging

from mixsolver.errors import DataValidationError, SolverError
from . import status

logger = logging.getLogger("mixsolver")

HANDLERS = {}


def errorhandler(exception_class):
    """Registers a handler returning the exit code for an exception class"""

    def decorator(function):
        HANDLERS[exception_class] = function
        return function

    return decorator


def handle_error(error: BaseException) -> int:
    """Logs the error with its handler and returns the exit code"""
    for klass in type(error).__mro__:
        if klass in HANDLERS:
            return HANDLERS[klass](error)
    return internal_error(error)


######################################################################
# Error Handlers
######################################################################
@errorhandler(DataValidationError)
def data_validation_error(error):
    """Handles bad cases, configurations and states with EXIT_USAGE_ERROR"""
    logger.warning(str(error))
    return status.EXIT_USAGE_ERROR


@errorhandler(SolverError)
def solver_error(error):
    """Handles numerical failures during a run with EXIT_RUNTIME_ERROR"""
    logger.error(str(error))
    return status.EXIT_RUNTIME_ERROR


@errorhandler(OSError)
def io_error(error):
    """Handles unreadable or unwritable files with EXIT_RUNTIME_ERROR"""
    logger.error(str(error))
    return status.EXIT_RUNTIME_ERROR


def internal_error(error):
    """Handles anything unexpected with EXIT_RUNTIME_ERROR"""
    logger.critical("%s: %s", type(error).__name__, error)
    return status.EXIT_RUNTIME_ERROR
