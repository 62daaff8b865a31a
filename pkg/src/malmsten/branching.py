"""Principal-branch helpers with the upper-edge convention.

Every logarithm in this package is the principal branch, Im(log) in (-pi, pi].
On the cut itself (negative real arguments) we take the limit from the upper
half-plane, which the helpers below enforce by clearing negative-zero
imaginary parts before calling numpy.  That single convention fixes log(-x),
log(log x) on (0,1), sqrt(log x), and log-gamma on the negative axis, and it
is what makes entries like the one evaluating to exactly i*pi come out right.
"""

import numpy as np

PI = np.pi
TWO_PI = 2.0 * np.pi
I = 1j


def as_complex(z):
    """Coerce to complex128, mapping -0.0 imaginary parts to +0.0."""
    z = np.asarray(z, dtype=np.complex128)
    on_axis = z.imag == 0.0
    if np.any(on_axis):
        z = np.where(on_axis, z.real + 0.0j, z)
    return z


def plog(z):
    """Principal log, upper edge on the negative real axis."""
    return np.log(as_complex(z))


def ppow(z, w):
    """Principal power z**w = exp(w log z) under the same convention."""
    if isinstance(w, (int, np.integer)):
        return as_complex(z) ** int(w)
    return np.exp(np.asarray(w, dtype=np.complex128) * plog(z))


def psqrt(z):
    return np.sqrt(as_complex(z))


def loglog(z):
    """log(log z): on (0,1) this is ln|ln x| + i*pi exactly."""
    return np.log(as_complex(plog(z)))


def log_neg(z):
    """log(-z) for z > 0, i.e. ln z + i*pi on the upper edge."""
    return plog(-as_complex(z))


def cexpm1(z):
    """exp(z) - 1 for complex z, accurate near 0 (numpy expm1 is real-only)."""
    z = np.asarray(z, dtype=np.complex128)
    small = np.abs(z) < 1e-5
    series = z * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0)))
    return np.where(small, series, np.exp(z) - 1.0)
