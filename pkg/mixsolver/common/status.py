# coding: utf8
"""
Descriptive process exit codes, for improved code readability

The command line follows the usual Unix convention that click also uses:
0 for success, 1 for a failure while running, 2 for bad usage.
"""

EXIT_OK = 0
EXIT_RUNTIME_ERROR = 1
EXIT_USAGE_ERROR = 2
