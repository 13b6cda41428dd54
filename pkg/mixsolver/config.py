"""
Global Configuration for the solver
"""
import os
import logging
from dotenv import load_dotenv

# Pick up a local .env file if one is present
load_dotenv()

# Get configuration from environment
LOGGING_LEVEL = getattr(
    logging, os.getenv("MIXSOLVER_LOG_LEVEL", "INFO").upper(), logging.INFO
)

# Where fine-grid reference solutions are cached
REF_CACHE = os.getenv("MIXSOLVER_REF_CACHE", "./refcache")

# Numerical defaults
DEFAULT_CFL = float(os.getenv("MIXSOLVER_DEFAULT_CFL", "0.45"))
REFERENCE_CELLS = int(os.getenv("MIXSOLVER_REFERENCE_CELLS", "10000"))
STEADY_TOL = float(os.getenv("MIXSOLVER_STEADY_TOL", "1e-12"))
STEADY_MAX_STEPS = int(os.getenv("MIXSOLVER_STEADY_MAX_STEPS", "100000"))
