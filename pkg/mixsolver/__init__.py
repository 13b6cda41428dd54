"""
Package: mixsolver

Finite volume solver for the compressible Euler equations of two-component
gas mixtures, with low-diffusion central schemes, classical upwind
comparators, a registry of test problems and verification diagnostics.

Logging is configured by the command line (see common.log_handlers);
library users get a silent logger until they configure one.
"""
import logging

__version__ = "1.0.0"

logging.getLogger("mixsolver").addHandler(logging.NullHandler())
