"""Select the compiled kernels when built, else the pure-Python fallback.

Set ``MOPKIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("MOPKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"
bareiss_solve = _impl.bareiss_solve
series_terms = _impl.series_terms
rational_dot = _impl.rational_dot

__all__ = ["BACKEND", "bareiss_solve", "rational_dot", "series_terms"]
