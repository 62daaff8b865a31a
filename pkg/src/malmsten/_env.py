"""Runtime feature flags.

MALMSTEN_NO_NUMBA=1 selects the pure-numpy kernel path even when numba is
importable.  The resolved choice is frozen at import time so a process never
mixes code paths.
"""

import os

_TRUTHY = {"1", "true", "yes", "on"}


def numba_requested() -> bool:
    return os.environ.get("MALMSTEN_NO_NUMBA", "").strip().lower() not in _TRUTHY


def numba_available() -> bool:
    if not numba_requested():
        return False
    try:
        import numba  # noqa: F401
    except Exception:
        return False
    return True


USE_NUMBA = numba_available()
