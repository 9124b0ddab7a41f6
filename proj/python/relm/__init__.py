"""Regularized extreme learning machines.

Thin package wrapper around the compiled `_relm` module: thresholding
operators, spectral estimates, the fixed-point solvers and ELM plumbing.
"""

try:
    from ._relm import *  # noqa: F401,F403  (installed layout)
    from ._relm import __version__  # noqa: F401
except ImportError:  # in-tree builds put _relm beside the package on sys.path
    from _relm import *  # noqa: F401,F403
    from _relm import __version__  # noqa: F401
