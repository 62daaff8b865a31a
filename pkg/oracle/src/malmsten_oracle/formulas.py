"""Closed-form right-hand sides of the catalog entries, in mpmath.

These mirror the printed displays; the evaluation stack (zeta, lerchphi,
loggamma, differentiation) is mpmath's own, independent of the primary
implementation.  Parameter points arrive as explicit dicts of decimal
strings; nothing is defaulted here.
"""

import mpmath as mp

from .evaluator import cnum, lerch_series, lerch_unit

I = mp.mpc(0, 1)


def _pi():
    return mp.pi


def _stirling(j, p):
    row = [mp.mpf(1)]
    for jj in range(1, j + 1):
        new = [mp.mpf(0)] * (jj + 1)
        for pp in range(jj + 1):
            new[pp] = (row[pp - 1] if pp >= 1 else 0) \
                - (jj - 1) * (row[pp] if pp < jj else 0)
        row = new
    return row[p] if p <= j else mp.mpf(0)


def _poch(x, n):
    acc = mp.mpc(1)
    for i in range(n):
        acc *= x + i
    return acc


def _neg_pow(w):
    return mp.exp(I * mp.pi * w)


def _phase_arg(shift, t):
    return -I * (I * mp.pi + shift + mp.log(t)) / (2 * mp.pi)


def _phi_any(m, s, a):
    m = mp.mpc(m)
    if m.imag > 0:
        return lerch_series(mp.exp(2j * mp.pi * m), s, a)
    from fractions import Fraction
    f = Fraction(float(m.real)).limit_denominator(64)
    return lerch_unit(f.numerator, f.denominator, s, a)


def theorem_sum(m, k, shift, b, g, n):
    pi = mp.pi
    A_b = _phase_arg(shift, b)
    A_g = _phase_arg(shift, g)
    em = _neg_pow(m)
    total = mp.power(b, m - 1) * (-em) * (2j * pi) ** (k + 1) \
        * (g - b) ** (-n) * _phi_any(m, -k, A_b)
    cache = {}

    def phi_g(order):
        if order not in cache:
            cache[order] = _phi_any(m, order, A_g)
        return cache[order]

    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = _poch(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += ((-1) ** (j - l) * em * mp.mpc(m) ** (p - l - h)
                              * (2j * pi) ** (1 - h + k) * mp.power(g, m - 1)
                              * (g - b) ** (-n) * ((g - b) / g) ** j
                              * mp.binomial(p, l) * mp.binomial(p - l, h)
                              / mp.factorial(j) * poch * phi_g(h - k) * S)
    return total


def _power_weight_sum(m, shift, g, n, k, zeta_like):
    pi = mp.pi
    A_g = _phase_arg(shift, g)
    em = _neg_pow(m)
    total = mp.mpc(0)
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = _poch(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += ((-1) ** (j - l) * em * mp.mpc(2 + m) ** (p - h - l)
                              * (2j * pi) ** (1 - h + k) * mp.power(g, 1 + m - n)
                              * mp.binomial(p, l) * mp.binomial(p - l, h)
                              / mp.factorial(j) * zeta_like(h - k, A_g) * poch * S)
    return total


def _frac_of(x):
    from fractions import Fraction
    f = Fraction(float(mp.mpf(x))).limit_denominator(64)
    return f.numerator, f.denominator


def rhs_thm(P):
    return theorem_sum(cnum(P["m"]), int(P["k"]), mp.log(cnum(P["a"])),
                       cnum(P["b"]), cnum(P["gamma"]), int(P["n"]))


def rhs_gr2(P):
    v, n = cnum(P["v"]), int(P["n"])
    b, g = cnum(P["b"]), cnum(P["gamma"])
    ssum = mp.mpc(0)
    for j in range(n):
        ssum += _poch(1 - v, j) * ((g - b) / g) ** j / mp.factorial(j)
    return mp.pi * mp.power(b, v - 1) / (mp.sin(mp.pi * v) * (g - b) ** n) \
        * (1 - mp.power(g / b, v - 1) * ssum)


def _zarg(t):
    return (mp.pi - I * mp.log(t)) / (2 * mp.pi)


def rhs_e1(P):
    k, b, g = cnum(P["k"]), cnum(P["beta"]), cnum(P["gamma"])
    return (2j * mp.pi) ** (1 + k) * (-mp.zeta(-k, _zarg(b))
                                      + mp.zeta(-k, _zarg(g))) / (b - g)


def rhs_e2(P):
    n = int(P["n"])
    a, al, th = cnum(P["a"]).real, cnum(P["alpha"]).real, cnum(P["theta"]).real
    D = mp.sqrt(a * a - 2 * al * al + a * a * mp.cos(2 * th))
    lo = a * mp.cos(th) - D / mp.sqrt(2)
    hi = a * mp.cos(th) + D / mp.sqrt(2)
    return mp.mpf(2) ** (mp.mpf(1) / 2 + n) * (I * mp.pi) ** (1 + n) / D \
        * (mp.zeta(-n, _zarg(lo)) - mp.zeta(-n, _zarg(hi)))


def rhs_e4(P):
    return mp.pi / 2 * mp.log(2j * mp.pi * mp.gamma(mp.mpf(3) / 4) ** 2
                              / mp.gamma(mp.mpf(1) / 4) ** 2)


def rhs_e5(P):
    return mp.pi / mp.sqrt(3) * mp.log(
        4 * _neg_pow(mp.mpf(1) / 3) * mp.pi ** (mp.mpf(5) / 3)
        / mp.gamma(mp.mpf(1) / 6) ** 2)


def rhs_e9(P):
    k, n = int(P["k"]), int(P["n"])
    pi = mp.pi
    q1, q3 = _neg_pow(mp.mpf(1) / 4), _neg_pow(mp.mpf(3) / 4)
    total = (I ** k * mp.mpf(2) ** (2 * k - n) * pi ** (1 + k)
             * (q1 * (1 - I) ** n * mp.zeta(-k, mp.mpf(3) / 8)
                - q1 * (1 - I) ** n * mp.zeta(-k, mp.mpf(7) / 8)
                - q3 * (1 + I) ** n * (mp.zeta(-k, mp.mpf(5) / 8)
                                       - mp.zeta(-k, mp.mpf(9) / 8))))
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = _poch(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += ((-1) ** (j - l) * I ** (k - h)
                              * mp.mpf(2) ** (-h + k + l - n - p)
                              * ((1 - I) ** n * (1 + I) ** j
                                 + (1 - I) ** j * (1 + I) ** n)
                              / mp.factorial(j)
                              * (-(mp.mpf(2) ** h) + mp.mpf(2) ** (1 + k))
                              * pi ** (1 - h + k) * mp.binomial(p, l)
                              * mp.binomial(p - l, h) * poch * S
                              * mp.zeta(h - k))
    return total


def rhs_e10(P):
    m, s = cnum(P["m"]).real, cnum(P["s"]).real
    n, b, g = int(P["n"]), cnum(P["b"]), cnum(P["gamma"])
    pm, qm = _frac_of(m)
    ps, qs = _frac_of(s)
    pi = mp.pi
    Ab = _phase_arg(0, b)
    Ag = _phase_arg(0, g)
    em, es = _neg_pow(m), _neg_pow(s)
    total = (g - b) ** (-n) / b * (
        em * mp.power(b, m) * lerch_unit(pm, qm, 1, Ab)
        - es * mp.power(b, s) * lerch_unit(ps, qs, 1, Ab))
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    mh = _poch(-h, h)
                    total += (I * (-1) ** (j - l) * I ** (-1 - h)
                              * mp.mpf(m) ** (-h - l) * (2 * pi) ** (-h)
                              * mp.mpf(s) ** (-h - l) * (1 - b / g) ** j
                              * (g - b) ** (-n) * mp.binomial(p, l)
                              * mp.binomial(p - l, h)
                              / (g * mp.factorial(j))
                              * (-em * mp.mpf(m) ** p * mp.mpf(s) ** (h + l)
                                 * mp.power(g, m) * lerch_unit(pm, qm, 1 + h, Ag)
                                 + es * mp.mpf(m) ** (h + l) * mp.mpf(s) ** p
                                 * mp.power(g, s) * lerch_unit(ps, qs, 1 + h, Ag))
                              * mh * S)
    return total


def rhs_e11(P):
    n, b, g = int(P["n"]), cnum(P["b"]), cnum(P["gamma"])
    pi = mp.pi
    total = 14 * pi * (g - b) ** (-n) * mp.zeta(3) / mp.sqrt(b)
    arg4 = (4 * pi + I * mp.log(b) - I * mp.log(g)) / (4 * pi)
    arg4b = -I * (2j * pi - mp.log(b) + mp.log(g)) / (4 * pi)
    arg2 = -I * (2j * pi - mp.log(b) + mp.log(g)) / (2 * pi)
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch3 = _poch(3 - h, h)
                    if poch3 == 0:
                        continue
                    zd = mp.zeta(-2 + h, arg4) - mp.zeta(-2 + h, arg4b)
                    pd = mp.diff(lambda t: lerch_unit(1, 2, t, arg2), -2 + h)
                    total -= ((-1) ** (j - l) * I ** (-h)
                              * mp.mpf(2) ** (3 - h + l - p) * pi ** (3 - h)
                              * (1 - b / g) ** j * (g - b) ** (-n)
                              * mp.binomial(p, l) * mp.binomial(p - l, h)
                              * poch3 * S / (mp.sqrt(g) * mp.factorial(j))
                              * (2 * zd * (3 + I * pi - 2 * mp.harmonic(2 - h)
                                           + mp.log(4) + 2 * mp.log(pi))
                                 + mp.mpf(2) ** h * pd))
    return total


def rhs_e13(P):
    return mp.pi * mp.log((mp.mpf(1) / 3 + I / 3) * mp.exp(-I / 2)
                          * mp.sqrt(2 * mp.pi) * mp.gamma(-0.25)
                          / mp.gamma(-0.75))


def rhs_e14(P):
    k = cnum(P["k"])
    a, g, n = cnum(P["a"]), cnum(P["gamma"]), int(P["n"])
    pi = mp.pi
    arg = _phase_arg(mp.log(a), g)
    total = mp.mpc(0)
    ki = int(mp.nint(k.real))
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = _poch(1 - h + ki, h)
                    if poch == 0:
                        continue
                    total += ((-1) ** (j - l)
                              * mp.mpf(2) ** (1 - 2 * h + ki - l + p)
                              * (I * pi) ** (1 - h + ki) * mp.power(g, 1 - n)
                              * mp.binomial(p, l) * mp.binomial(p - l, h)
                              / mp.factorial(j)
                              * mp.zeta(h - ki, arg) * poch * S)
    return total


def rhs_e16(P):
    n = int(P["n"])
    pi = mp.pi
    r2 = mp.sqrt(2)
    total = mp.mpc(0)
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = _poch(mp.mpf(1) / 2 - h, h)
                    if poch == 0:
                        continue
                    w = mp.mpf(2) ** (1 + h)
                    br = ((r2 * mp.log(2)
                           + (r2 - w) * (mp.log(I * pi) + mp.digamma(0.5))
                           + (-r2 + w) * mp.digamma(mp.mpf(1) / 2 - h))
                          * mp.zeta(mp.mpf(1) / 2 + h)
                          + (-r2 + w) * mp.zeta(mp.mpf(1) / 2 + h, 1, 1))
                    total -= (_neg_pow(mp.mpf(1) / 4 + j - l) * I ** (-h)
                              * mp.mpf(2) ** (-2 * h - l + p)
                              * pi ** (mp.mpf(1) / 2 - h)
                              * mp.binomial(p, l) * mp.binomial(p - l, h)
                              * poch * S / mp.factorial(j) * br)
    return total


def rhs_e18(P):
    m, s = cnum(P["m"]).real, cnum(P["s"]).real
    n, a = int(P["n"]), cnum(P["a"]).real
    b, g = cnum(P["b"]), cnum(P["gamma"])
    pm, qm = _frac_of(m)
    ps, qs = _frac_of(s)
    pi = mp.pi

    def A(t):
        return -I * (I * pi + a + mp.log(t)) / (2 * pi)

    em, es = _neg_pow(m), _neg_pow(s)
    total = (g - b) ** (-n) * (
        -em * mp.power(b, m) * lerch_unit(pm, qm, 1, A(b))
        + es * mp.power(b, s) * lerch_unit(ps, qs, 1, A(b)))
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    mh = _poch(-h, h)
                    total -= ((g - b) ** (-n) * (-1) ** (j - l)
                              * mp.mpf(1 + m) ** (-h - l) * (2j * pi) ** (-h)
                              * mp.mpf(1 + s) ** (-h - l) * (1 - b / g) ** j
                              * mp.binomial(p, l) * mp.binomial(p - l, h)
                              / mp.factorial(j)
                              * (-em * mp.mpf(1 + m) ** p * mp.mpf(1 + s) ** (h + l)
                                 * mp.power(g, m) * lerch_unit(pm, qm, 1 + h, A(g))
                                 + es * mp.mpf(1 + m) ** (h + l) * mp.mpf(1 + s) ** p
                                 * mp.power(g, s) * lerch_unit(ps, qs, 1 + h, A(g)))
                              * mh * S)
    return total


def rhs_e25(P):
    m, s = cnum(P["m"]).real, cnum(P["s"]).real
    k, n, a = int(P["k"]), int(P["n"]), cnum(P["a"]).real
    b, c, g = cnum(P["b"]), cnum(P["c"]), cnum(P["gamma"])
    pm, qm = _frac_of(m)
    ps, qs = _frac_of(s)
    pi = mp.pi
    la = mp.log(a)

    def A(t):
        return _phase_arg(la, t)

    em, es = _neg_pow(m), _neg_pow(s)
    total = ((2j * pi) ** (1 + k) * (g - b) ** (-n) * (g - c) ** (-n) / (b - c)
             * ((g - c) ** n * (em * mp.power(b, m) * lerch_unit(pm, qm, -k, A(b))
                                - es * mp.power(b, s) * lerch_unit(ps, qs, -k, A(b)))
                - (g - b) ** n * (em * mp.power(c, m) * lerch_unit(pm, qm, -k, A(c))
                                  - es * mp.power(c, s) * lerch_unit(ps, qs, -k, A(c)))))
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = _poch(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += (I * (-1) ** (j - l) * I ** (k - h)
                              * mp.mpf(1 + m) ** (-h - l) * (2 * pi) ** (1 - h + k)
                              * mp.mpf(1 + s) ** (-h - l)
                              * (g - b) ** (-n) * (g - c) ** (-n)
                              / ((b - c) * mp.factorial(j))
                              * ((1 - c / g) ** j * (g - b) ** n
                                 - (1 - b / g) ** j * (g - c) ** n)
                              * mp.binomial(p, l) * mp.binomial(p - l, h)
                              * (em * mp.mpf(1 + m) ** p * mp.mpf(1 + s) ** (h + l)
                                 * mp.power(g, m) * lerch_unit(pm, qm, h - k, A(g))
                                 - es * mp.mpf(1 + m) ** (h + l) * mp.mpf(1 + s) ** p
                                 * mp.power(g, s) * lerch_unit(ps, qs, h - k, A(g)))
                              * poch * S)
    return total


def rhs_k1(P):
    m = cnum(P["m"]).real
    pm, qm = _frac_of(m)
    return _power_weight_sum(
        mp.mpf(m), 0, cnum(P["gamma"]), int(P["n"]), int(P["k"]),
        lambda order, arg: lerch_unit(pm, qm, order, arg))


def rhs_k4(P):
    m, s = cnum(P["m"]).real, cnum(P["s"]).real
    k, n = int(P["k"]), int(P["n"])
    a, g = cnum(P["a"]).real, cnum(P["gamma"])
    pm, qm = _frac_of(m)
    ps, qs = _frac_of(s)
    pi = mp.pi
    A = _phase_arg(mp.log(a), g)
    em, es = _neg_pow(m), _neg_pow(s)
    total = mp.mpc(0)
    for j in range(n):
        for p in range(j + 1):
            S = _stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = _poch(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += (I * (-1) ** (j - l) * I ** (k - h)
                              * mp.mpf(2 + m) ** (-h - l) * (2 * pi) ** (1 - h + k)
                              * mp.mpf(2 + s) ** (-h - l) * mp.power(g, 1 - n)
                              * mp.binomial(p, l) * mp.binomial(p - l, h)
                              / mp.factorial(j)
                              * (-em * mp.mpf(2 + m) ** p * mp.mpf(2 + s) ** (h + l)
                                 * mp.power(g, m) * lerch_unit(pm, qm, h - k, A)
                                 + es * mp.mpf(2 + m) ** (h + l) * mp.mpf(2 + s) ** p
                                 * mp.power(g, s) * lerch_unit(ps, qs, h - k, A))
                              * poch * S)
    return total


def rhs_k5(P):
    A12 = mp.glaisher ** 12
    return mp.pi ** 2 * mp.log(A12 / (4 * mp.cbrt(2) * mp.e * mp.pi * I))


def rhs_k6(P):
    r2 = mp.sqrt(2)
    return (1 + I) * mp.pi ** mp.mpf(1.5) * (
        (-1 + 2 * r2) * (mp.pi - 2 * I * mp.log(2 * mp.pi)) * mp.zeta(-0.5)
        + 2 * I * mp.polylog(-0.5, -1))


def rhs_p1(P):
    m, s = cnum(P["m"]).real, cnum(P["s"]).real
    k, a, b = int(P["k"]), cnum(P["a"]).real, cnum(P["b"])
    pm, qm = _frac_of(m)
    ps, qs = _frac_of(s)
    pi = mp.pi
    la = mp.log(a)

    def A(t):
        return _phase_arg(la, t)

    em, es = _neg_pow(m), _neg_pow(s)
    return -(mp.mpf(2) ** k * (I * pi) ** (1 + k) / b) * (
        em * mp.power(-b, m) * lerch_unit(pm, qm, -k, A(-b))
        - em * mp.power(b, m) * lerch_unit(pm, qm, -k, A(b))
        + es * (-mp.power(-b, s) * lerch_unit(ps, qs, -k, A(-b))
                + mp.power(b, s) * lerch_unit(ps, qs, -k, A(b))))


def rhs_p2(P):
    g1 = mp.stieltjes(1, mp.mpf(1) / 4) - mp.stieltjes(1, mp.mpf(3) / 4)
    return (mp.pi ** 2 - 2j * mp.pi * mp.log(4 * mp.pi) - 2j * g1) / 4


def rhs_p3(P):
    m, s = cnum(P["m"]).real, cnum(P["s"]).real
    a, b = cnum(P["a"]).real, cnum(P["b"])
    pm, qm = _frac_of(m)
    ps, qs = _frac_of(s)
    pi = mp.pi

    def pair(p_, q_, t):
        B1 = (I * a + pi - I * mp.log(t)) / (2 * pi)
        B2 = -I * (a + I * pi + mp.log(t)) / (2 * pi)
        return lerch_unit(p_, q_, 1, B1) - lerch_unit(p_, q_, 1, B2)

    em, es = _neg_pow(m), _neg_pow(s)
    return (-em * mp.power(-b, m) * pair(pm, qm, -b)
            + em * mp.power(b, m) * pair(pm, qm, b)
            + es * mp.power(-b, s) * pair(ps, qs, -b)
            - es * mp.power(b, s) * pair(ps, qs, b)) / (4 * a * b)


def rhs_p5(P):
    b, g = cnum(P["b"]), cnum(P["gamma"])
    pi = mp.pi
    lb, lmb, lg_ = mp.log(b), mp.log(-b), mp.log(g)
    l4p = mp.log(4) + mp.log(pi)
    sqb, sqmb, sqg = mp.sqrt(b), mp.sqrt(-b), mp.sqrt(g)
    b32 = b * sqb
    c0 = (-mp.log(2) - mp.log(pi)) / 2

    def block(t_log):
        up = -1 + (pi - I * t_log) / (4 * pi)
        dn = -mp.mpf(1) / 4 - I * t_log / (4 * pi)
        return (c0 + mp.log(up) + mp.loggamma(up),
                c0 + mp.log(dn) + mp.loggamma(dn))

    tot = mp.mpc(0)
    tot += (-mp.mpf(1) / 4 + I * lb / (4 * pi)) * (
        -I * (1 + b) * pi ** 2 / (2 * b32 * (b - g))
        - (1 + b) * pi * l4p / (b32 * (b - g)))
    tot += (mp.mpf(1) / 2 - (pi - I * lb) / (4 * pi)) * (
        I * (1 + b) * pi ** 2 / (2 * b32 * (b - g))
        + (1 + b) * pi * l4p / (b32 * (b - g)))
    tot += (mp.mpf(1) / 2 - (pi - I * lmb) / (4 * pi)) * (
        -I * (-1 + b) * pi ** 2 / (2 * sqmb * b * (b + g))
        + (1 - b) * pi * l4p / (sqmb * b * (b + g)))
    tot += (-mp.mpf(1) / 4 + I * lmb / (4 * pi)) * (
        I * (-1 + b) * pi ** 2 / (2 * sqmb * b * (b + g))
        + (-1 + b) * pi * l4p / (sqmb * b * (b + g)))
    tot += (-I * pi ** 2 * (1 + g) / ((b - g) * sqg * (b + g))
            - 2 * pi * (1 + g) * l4p / ((b - g) * sqg * (b + g))) \
        * (mp.mpf(1) / 2 - (pi - I * lg_) / (4 * pi))
    tot += (I * pi ** 2 * (1 + g) / ((b - g) * sqg * (b + g))
            + 2 * pi * (1 + g) * l4p / ((b - g) * sqg * (b + g))) \
        * (-mp.mpf(1) / 4 + I * lg_ / (4 * pi))
    upb, dnb = block(lmb)
    tot += (-1 + b) * pi * upb / (sqmb * b * (b + g))
    tot += (1 - b) * pi * dnb / (sqmb * b * (b + g))
    upb, dnb = block(lb)
    tot += -(1 + b) * pi * upb / (b32 * (b - g))
    tot += (1 + b) * pi * dnb / (b32 * (b - g))
    upb, dnb = block(lg_)
    tot += 2 * pi * (1 + g) * upb / ((b - g) * sqg * (b + g))
    tot += -2 * pi * (1 + g) * dnb / ((b - g) * sqg * (b + g))
    return tot


def _q8(t):
    pi = mp.pi
    l = mp.log(t)
    first = mp.log(mp.gamma((pi - I * l) / (8 * pi))
                   / (2 * mp.gamma(mp.mpf(5) / 8 - I * l / (8 * pi))))
    second = mp.log(mp.gamma(mp.mpf(3) / 8 - I * l / (8 * pi))
                    / (2 * mp.gamma(mp.mpf(7) / 8 - I * l / (8 * pi))))
    return first, second


def rhs_p7(P):
    b, g = cnum(P["b"]), cnum(P["gamma"])
    pi = mp.pi
    qb, qmb, qg = mp.power(b, 0.25), mp.power(-b, 0.25), mp.power(g, 0.25)
    sb, smb, sg = mp.sqrt(b), mp.sqrt(-b), mp.sqrt(g)
    f_mb1, f_mb2 = _q8(-b)
    f_b1, f_b2 = _q8(b)
    f_g1, f_g2 = _q8(g)
    pref = (mp.mpf(1) / 4 + I / 4) * _neg_pow(mp.mpf(1) / 4) * pi / (
        qmb * mp.power(b, 1.25) * (b - g) * qg * (b + g))
    inner = pi * qg * ((1 + smb) * qb * (b - g) + (1 + sb) * qmb * (b + g))
    inner += 4 * I * qmb * mp.power(b, 1.25) * (1 + sg) * mp.log(2)
    inner += 4 * I * qmb * mp.power(b, 1.25) * (1 + sg) * mp.log(I * pi)
    inner += -2 * I * qg * ((1 + smb) * qb * (b - g)
                            + (1 + sb) * qmb * (b + g)) * mp.log(2 * pi)
    inner += (2 + 2 * I) * qg * (
        qb * (b - g) * ((I + smb) * f_mb1 + (1 + I * smb) * f_mb2)
        + qmb * (b + g) * ((I + sb) * f_b1 + (1 + I * sb) * f_b2))
    inner += ((4 + 4 * I) * mp.power(b, 2.25)
              * ((I + sg) * f_g1 + (1 + I * sg) * f_g2)) / mp.power(-b, 0.75)
    return pref * inner


def rhs_p9(P):
    return (-mp.log(2) + mp.pi * mp.log(
        -(1 + I) * mp.sqrt(2 / mp.pi) * mp.gamma(0.25) / mp.gamma(-0.25))) / 2


def rhs_p11(P):
    b, g = cnum(P["b"]), cnum(P["gamma"])
    pi = mp.pi
    lb, lmb, lg_ = mp.log(b), mp.log(-b), mp.log(g)
    sb, smb, sg = mp.sqrt(b), mp.sqrt(-b), mp.sqrt(g)
    qg = mp.power(g, 0.25)
    q1 = _neg_pow(mp.mpf(1) / 4)
    r2 = mp.sqrt(2)
    l2pi, l4pi = mp.log(2 * pi), mp.log(4 * pi)
    l32p3 = mp.log(32 * pi ** 3)
    f_mb1, f_mb2 = _q8(-b)
    f_b1, f_b2 = _q8(b)
    f_g1, f_g2 = _q8(g)
    t = mp.mpc(0)
    t += -4 * r2 * b ** 2 * pi * qg * (I * pi / 2 + l2pi)
    t += -2 * r2 * mp.power(-b, 0.75) * pi * (b - g) * sg * (I * pi / 2 + l2pi)
    t += smb * (b - g) * sg * (pi - I * lmb) * (I * pi / 2 + l4pi)
    t += smb * (b - g) * sg * (pi + I * lmb) * (I * pi / 2 + l4pi)
    t += -sb * sg * (b + g) * (pi - I * lb) * (I * pi / 2 + l4pi)
    t += -sb * sg * (b + g) * (pi + I * lb) * (I * pi / 2 + l4pi)
    t += r2 * mp.power(b, 0.75) * pi * sg * (b + g) * (I * pi + mp.log(4 * pi ** 2))
    t += b ** 2 * (I * pi + 2 * l4pi) * (pi - I * lg_)
    t += b ** 2 * (I * pi + 2 * l4pi) * (pi + I * lg_)
    t += 4 * q1 * mp.power(-b, 0.75) * pi * (b - g) * sg * (f_mb1 - I * f_mb2)
    t += -4 * q1 * mp.power(b, 0.75) * pi * sg * (b + g) * (f_b1 - I * f_b2)
    t += 8 * q1 * b ** 2 * pi * qg * (f_g1 - I * f_g2)
    t += -2 * smb * pi * (b - g) * sg * (
        l32p3 - 2 * mp.log(-pi - I * lmb)
        - 2 * mp.loggamma(-(pi + I * lmb) / (4 * pi)))
    t += 2 * smb * pi * (b - g) * sg * (
        l32p3 - 2 * mp.log(-3 * pi - I * lmb)
        - 2 * mp.loggamma(-mp.mpf(3) / 4 - I * lmb / (4 * pi)))
    t += 2 * sb * pi * sg * (b + g) * (
        l32p3 - 2 * mp.log(-pi - I * lb)
        - 2 * mp.loggamma(-(pi + I * lb) / (4 * pi)))
    t += -2 * sb * pi * sg * (b + g) * (
        l32p3 - 2 * mp.log(-3 * pi - I * lb)
        - 2 * mp.loggamma(-mp.mpf(3) / 4 - I * lb / (4 * pi)))
    t += -4 * b ** 2 * pi * (
        l32p3 - 2 * mp.log(-pi - I * lg_)
        - 2 * mp.loggamma(-(pi + I * lg_) / (4 * pi)))
    t += 4 * b ** 2 * pi * (
        l32p3 - 2 * mp.log(-3 * pi - I * lg_)
        - 2 * mp.loggamma(-mp.mpf(3) / 4 - I * lg_ / (4 * pi)))
    return t / (4 * b ** 2 * (b - g) * sg * (b + g))


def rhs_p12(P):
    pi = mp.pi
    r2 = mp.sqrt(2)
    g18, g38 = mp.gamma(mp.mpf(1) / 8), mp.gamma(mp.mpf(3) / 8)
    g58, g78 = mp.gamma(mp.mpf(5) / 8), mp.gamma(mp.mpf(7) / 8)
    big = mp.log(81 * mp.power(g58 / g18, 4 * _neg_pow(mp.mpf(1) / 4))
                 * mp.power(g38 / g78, 4 * _neg_pow(mp.mpf(3) / 4)))
    return (((1 - 5 * I) + 2 * I * r2) * pi ** 2 + mp.log(16)
            + 2 * pi * (-I - (13 - I) * mp.log(2) + r2 * mp.log(64)
                        + (-5 + 2 * r2) * mp.log(pi)
                        + 6 * mp.log(mp.gamma(0.25)) - 6 * mp.log(mp.gamma(0.75))
                        + big + 4 * mp.loggamma(-0.75)
                        - 4 * mp.loggamma(-0.25))) / 16


ENTRY_FORMULAS = {
    "THM": rhs_thm, "GR2": rhs_gr2,
    "E1": rhs_e1, "E2": rhs_e2, "E4": rhs_e4, "E5": rhs_e5, "E9": rhs_e9,
    "E10": rhs_e10, "E11": rhs_e11, "E13": rhs_e13, "E14": rhs_e14,
    "E16": rhs_e16, "E18": rhs_e18, "E25": rhs_e25,
    "K1": rhs_k1, "K4": rhs_k4, "K5": rhs_k5, "K6": rhs_k6,
    "P1": rhs_p1, "P2": rhs_p2, "P3": rhs_p3, "P5": rhs_p5, "P7": rhs_p7,
    "P9": rhs_p9, "P11": rhs_p11, "P12": rhs_p12,
}
