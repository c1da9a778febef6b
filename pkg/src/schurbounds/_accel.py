"""Numba switch.

Set ``SCHURBOUNDS_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is importable. The choice is made once, at import time.
"""
import os

_FLAG = "SCHURBOUNDS_DISABLE_NUMBA"

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is an optional extra
    _numba = None

HAS_NUMBA = _numba is not None
USE_NUMBA = HAS_NUMBA and os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


def njit(func):
    """``numba.njit(cache=True)`` when numba is installed, else ``None``.

    Returning ``None`` lets callers keep the numpy path without a second
    import guard.
    """
    if _numba is None:
        return None
    return _numba.njit(cache=True)(func)
