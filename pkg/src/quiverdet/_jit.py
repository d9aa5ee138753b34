"""Optional numba acceleration.

Hot kernels are written once in a numba-compatible subset of Python and
wrapped with :func:`njit`.  Setting ``QUIVERDET_DISABLE_NUMBA=1`` in the
environment (before import) or running without numba installed leaves them
as plain Python/numpy functions.
"""

import os

_DISABLED = os.environ.get("QUIVERDET_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    import numba as _numba
except ImportError:
    _numba = None

NUMBA_ENABLED = _numba is not None


def njit(func):
    if _numba is None:
        return func
    return _numba.njit(cache=True)(func)
