"""Scalar numeric kernels shared by the numba and pure-numpy paths.

These are written against ``cmath`` so the exact same source compiles under
``numba.njit`` and also runs as plain Python.  Anything vectorized lives in
:mod:`malmsten.kernels`.
"""

import cmath


def hurwitz_em_core(s, a, N, M, bern_fac):
    """Euler-Maclaurin evaluation of zeta(s, a).

    ``bern_fac[r]`` must hold B_{2r}/(2r)!.  Caller guarantees s != 1 and
    Re(a) > 0, so every a + j stays off the branch cut of the principal log.
    """
    tot = 0j
    for j in range(N):
        tot += cmath.exp(-s * cmath.log(a + j))
    w = a + N
    lw = cmath.log(w)
    tot += cmath.exp((1.0 - s) * lw) / (s - 1.0)
    tot += 0.5 * cmath.exp(-s * lw)
    poch = s  # (s)_{2r-1}, starting at r = 1
    for r in range(1, M + 1):
        tot += bern_fac[r] * poch * cmath.exp((-s - 2.0 * r + 1.0) * lw)
        poch *= (s + 2.0 * r - 1.0) * (s + 2.0 * r)
    return tot


def lerch_series_core(z, s, a, eps, nmax):
    """Direct power series sum_j z^j (a+j)^{-s} for |z| < 1.

    Returns (value, terms); terms < 0 signals that nmax was hit before the
    geometric tail bound dropped below eps.  The past-the-hump check matters
    for negative Re(s), where early terms grow polynomially.
    """
    az = abs(z)
    tot = 0j
    zp = 1.0 + 0j
    prev = 1e300
    for j in range(nmax):
        term = zp * cmath.exp(-s * cmath.log(a + j))
        tot += term
        at = abs(term)
        if j > 8 and at <= prev:
            tail = 2.0 * az * at / (1.0 - az)
            if tail < eps * (1.0 + abs(tot)):
                return tot, j + 1
        prev = at
        zp *= z
    return tot, -nmax
