"""Hot-kernel dispatch: numba-jitted scalar loops or a numpy fallback.

The env flag MALMSTEN_NO_NUMBA=1 forces the fallback; see benchmarks/ for a
comparison of the two paths.
"""

import numpy as np

from ._env import USE_NUMBA
from . import _kernels_impl as _impl

if USE_NUMBA:
    from numba import njit

    hurwitz_em_core = njit(cache=True)(_impl.hurwitz_em_core)
    lerch_series_core = njit(cache=True)(_impl.lerch_series_core)
else:
    hurwitz_em_core = _impl.hurwitz_em_core

    def lerch_series_core(z, s, a, eps, nmax, _chunk=512):
        # Vectorized in chunks; mirrors the scalar kernel's tail criterion.
        az = abs(z)
        tot = 0j
        start = 0
        prev = np.inf
        while start < nmax:
            stop = min(start + _chunk, nmax)
            j = np.arange(start, stop)
            terms = z ** j * np.exp(-s * np.log(a + j + 0j))
            tot += terms.sum()
            at = abs(terms[-1])
            if start > 8 and at <= prev:
                tail = 2.0 * az * at / (1.0 - az)
                if tail < eps * (1.0 + abs(tot)):
                    return tot, stop
            prev = at
            start = stop
        return tot, -nmax


def warmup():
    """Trigger jit compilation outside of timed paths."""
    b = np.zeros(3)
    hurwitz_em_core(2.0 + 0j, 1.0 + 0j, 4, 2, b)
    lerch_series_core(0.5 + 0j, 2.0 + 0j, 1.0 + 0j, 1e-10, 200)
