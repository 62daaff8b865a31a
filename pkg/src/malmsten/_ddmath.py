"""Minimal double-double arithmetic for the cancellation-prone zeta region.

The Euler-Maclaurin form of zeta(s, a) sums terms of size (a+N)^{-Re s} that
cancel down to O(1); for Re(s) well below zero the plain float64 terms carry
|s log w| * eps absolute noise, which is fatal at the 1e-12 tolerances the
invariant suite demands.  A (hi, lo) float pair recovers ~31 significant
digits for the handful of operations needed: add, mul, exp, log, sin/cos of
moderate arguments.  No FMA on py3.10, so products use Dekker splitting.

Only real bases are needed here (complex shift parameters a always arrive
with integer s and take the exact Bernoulli route instead).
"""

import math

_SPLIT = 134217729.0  # 2**27 + 1


def two_sum(x, y):
    s = x + y
    b = s - x
    return s, (x - (s - b)) + (y - b)


def quick_two_sum(x, y):
    s = x + y
    return s, y - (s - x)


def _split(x):
    t = _SPLIT * x
    hi = t - (t - x)
    return hi, x - hi


def two_prod(x, y):
    p = x * y
    xh, xl = _split(x)
    yh, yl = _split(y)
    return p, ((xh * yh - p) + xh * yl + xl * yh) + xl * yl


def dd_add(a, b):
    s, e = two_sum(a[0], b[0])
    e += a[1] + b[1]
    return quick_two_sum(s, e)


def dd_add_d(a, x):
    s, e = two_sum(a[0], x)
    e += a[1]
    return quick_two_sum(s, e)


def dd_neg(a):
    return (-a[0], -a[1])


def dd_sub(a, b):
    return dd_add(a, dd_neg(b))


def dd_mul(a, b):
    p, e = two_prod(a[0], b[0])
    e += a[0] * b[1] + a[1] * b[0]
    return quick_two_sum(p, e)


def dd_mul_d(a, x):
    p, e = two_prod(a[0], x)
    e += a[1] * x
    return quick_two_sum(p, e)


def dd_div(a, b):
    q1 = a[0] / b[0]
    r = dd_sub(a, dd_mul_d(b, q1))
    q2 = r[0] / b[0]
    r = dd_sub(r, dd_mul_d(b, q2))
    return quick_two_sum(q1, q2 + r[0] / b[0])


def dd_from(x):
    return (float(x), 0.0)


_LN2 = (0.6931471805599453, 2.3190468138462996e-17)
_PI_2 = (1.5707963267948966, 6.123233995736766e-17)

_INV_FACT = [dd_from(1.0)]
for _k in range(1, 26):
    _INV_FACT.append(dd_div(_INV_FACT[-1], dd_from(float(_k))))


def dd_exp(a):
    """exp of a dd number, |a| <= ~700."""
    k = round(a[0] / _LN2[0])
    r = dd_sub(a, dd_mul_d(_LN2, float(k)))
    # Taylor on |r| <= 0.347
    acc = dd_add_d(r, 1.0)
    term = r
    for n in range(2, 20):
        term = dd_mul(term, r)
        t = dd_mul(term, _INV_FACT[n])
        acc = dd_add(acc, t)
        if abs(t[0]) < 1e-35 * abs(acc[0]):
            break
    return dd_mul_d(acc, math.ldexp(1.0, k))


def dd_log(x):
    """log of a positive double or dd pair, via one Newton step off dd_exp."""
    if isinstance(x, tuple):
        hi = dd_log(x[0])
        return dd_add_d(hi, x[1] / x[0])  # log1p(lo/hi) to O(eps^2)
    y0 = math.log(x)
    e = dd_exp(dd_from(-y0))
    r = dd_mul_d(e, x)          # x * exp(-y0) = 1 + delta, delta ~ eps
    return dd_add_d((r[0] - 1.0 + r[1], 0.0), y0)


def _sin_taylor(r):
    acc = r
    term = r
    r2 = dd_mul(r, r)
    for n in range(3, 24, 2):
        term = dd_mul(term, r2)
        t = dd_mul(term, _INV_FACT[n])
        acc = dd_add(acc, t) if (n // 2) % 2 == 0 else dd_sub(acc, t)
        if abs(t[0]) < 1e-35:
            break
    return acc


def _cos_taylor(r):
    acc = dd_from(1.0)
    term = dd_from(1.0)
    r2 = dd_mul(r, r)
    for n in range(2, 25, 2):
        term = dd_mul(term, r2)
        t = dd_mul(term, _INV_FACT[n])
        acc = dd_add(acc, t) if (n // 2) % 2 == 0 else dd_sub(acc, t)
        if abs(t[0]) < 1e-35:
            break
    return acc


def dd_sincos(a):
    """(sin, cos) of a dd number with pi/2 argument reduction."""
    k = round(a[0] / _PI_2[0])
    r = dd_sub(a, dd_mul_d(_PI_2, float(k)))
    s, c = _sin_taylor(r), _cos_taylor(r)
    m = k % 4
    if m == 0:
        return s, c
    if m == 1:
        return c, dd_neg(s)
    if m == 2:
        return dd_neg(s), dd_neg(c)
    return dd_neg(c), s


def dd_sqrt(x):
    """sqrt of a dd number via one Newton step."""
    y0 = math.sqrt(x[0])
    r = dd_mul_d(dd_sub(x, dd_mul((y0, 0.0), (y0, 0.0))), 0.5 / y0)
    return dd_add_d(r, y0)


def _coerce(x):
    return x if isinstance(x, tuple) else (float(x), 0.0)


def dd_clog(zre, zim):
    """Principal log of a complex number with Re > 0, components float or dd."""
    zre, zim = _coerce(zre), _coerce(zim)
    r2 = dd_add(dd_mul(zre, zre), dd_mul(zim, zim))
    lr = dd_mul_d(dd_log(r2), 0.5)
    th0 = math.atan2(zim[0], zre[0])
    s, c = dd_sincos(dd_from(th0))
    # rotation residual: (zim cos - zre sin)/|z| ~ theta error, one Newton step
    num = dd_sub(dd_mul(c, zim), dd_mul(s, zre))
    li = dd_add(dd_from(th0), dd_div(num, dd_sqrt(r2)))
    return lr, li


def dd_cpow_complex_base(zre, zim, sigma, tau):
    """z^(sigma + i tau) for complex z with Re z > 0; parts float or dd."""
    zre_c, zim_c = _coerce(zre), _coerce(zim)
    if zim_c[0] == 0.0 and zim_c[1] == 0.0 and zre_c[0] > 0.0:
        return dd_cpow_real_base(zre_c if zre_c[1] != 0.0 else zre_c[0],
                                 sigma, tau)
    Lr, Li = dd_clog(zre_c, zim_c)
    smul = (lambda L: dd_mul(L, sigma)) if isinstance(sigma, tuple) else \
        (lambda L: dd_mul_d(L, sigma))
    tmul = (lambda L: dd_mul(L, tau)) if isinstance(tau, tuple) else \
        (lambda L: dd_mul_d(L, tau))
    re = dd_sub(smul(Lr), tmul(Li))
    im = dd_add(smul(Li), tmul(Lr))
    mag = dd_exp(re)
    s, c = dd_sincos(im)
    return dd_mul(mag, c), dd_mul(mag, s)


def dd_cpow_real_base(w, sigma, tau):
    """w^(sigma + i tau) for real w > 0, returned as ((re_hi,re_lo),(im_hi,im_lo)).

    w, sigma and tau may each be floats or dd pairs; bases like a+j and
    exponents built from arithmetic like 1 - s must be passed as dd
    (two_sum) or their rounding alone costs |s log w| * eps relative error,
    defeating the whole exercise.
    """
    L = dd_log(w)
    re = dd_mul(L, sigma) if isinstance(sigma, tuple) else dd_mul_d(L, sigma)
    im = dd_mul(L, tau) if isinstance(tau, tuple) else dd_mul_d(L, tau)
    mag = dd_exp(re)
    s, c = dd_sincos(im)
    return dd_mul(mag, c), dd_mul(mag, s)


def dd_cadd(a, b):
    return dd_add(a[0], b[0]), dd_add(a[1], b[1])


def dd_cmul(a, b):
    re = dd_sub(dd_mul(a[0], b[0]), dd_mul(a[1], b[1]))
    im = dd_add(dd_mul(a[0], b[1]), dd_mul(a[1], b[0]))
    return re, im


def dd_cmul_d(a, x):
    return dd_mul_d(a[0], x), dd_mul_d(a[1], x)


def dd_cdiv(a, b):
    d = dd_add(dd_mul(b[0], b[0]), dd_mul(b[1], b[1]))
    num_re = dd_add(dd_mul(a[0], b[0]), dd_mul(a[1], b[1]))
    num_im = dd_sub(dd_mul(a[1], b[0]), dd_mul(a[0], b[1]))
    return dd_div(num_re, d), dd_div(num_im, d)


def dd_c_to_complex(a):
    return complex(a[0][0] + a[0][1], a[1][0] + a[1][1])


def dd_c_from_complex(z):
    return dd_from(z.real), dd_from(z.imag)
