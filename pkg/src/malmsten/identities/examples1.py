"""Catalog entries E1-E15: log-power and log-log integrals with zeta, gamma
and Lerch closed forms."""

import cmath
import math

import numpy as np

from .. import specfun as sf
from ..branching import PI, plog, ppow, psqrt, loglog, cexpm1
from .base import (IdentityEntry, clog, cpow, csqrt, neg_pow, phase_arg,
                   spec, sp)
from .params import require, as_int, as_real

I = 1j
TWO_PI = 2.0 * PI


def _zh(s, a):
    return sf.hurwitz_zeta(s, a)


def _gamma(z):
    return sf.gamma_fn(z)


def _zeta_arg(t):
    # (pi - i log t)/(2 pi)
    return (PI - I * clog(t)) / TWO_PI


# ---------------------------------------------------------------- E1
def _e1_validate(p):
    require(as_real(p.k, "k") > -1, "Re(k) > -1")
    require(as_real(p.beta, "beta") > 0, "beta > 0")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")
    require(p.beta != p.gamma, "beta != gamma")


def _e1_rhs(p):
    k, b, g = p.k, complex(p.beta), complex(p.gamma)
    return ((2j * PI) ** (1 + k)
            * (-_zh(-k, _zeta_arg(b)) + _zh(-k, _zeta_arg(g))) / (b - g))


def _e1_lhs(p):
    k, b, g = p.k, complex(p.beta), complex(p.gamma)
    if float(k) == int(k):
        ki = int(k)

        def f(x):
            return plog(x) ** ki / ((x + b) * (x + g))
    else:
        def f(x):
            return ppow(plog(x), k) / ((x + b) * (x + g))

    return spec(f, [sp(1.0, "branch-point")] if float(k) != int(k) else ())


E1 = IdentityEntry(
    id="E1",
    statement=("int_0^inf log^k(x)/((x+b)(x+g)) dx = (2 i pi)^(1+k) "
               "(zeta(-k,(pi-i log g)/(2 pi)) - zeta(-k,(pi-i log b)/(2 pi)))"
               "/(b-g)"),
    klass="regular",
    active=("k", "beta", "gamma"),
    defaults={"k": 2, "beta": 2.0, "gamma": 3.0},
    validate=_e1_validate,
    rhs=_e1_rhs,
    lhs=_e1_lhs,
)


# ---------------------------------------------------------------- E2
def _e2_validate(p):
    n = as_int(p.n, "n")
    require(n >= 0, "n >= 0")
    a, al, th = as_real(p.a, "a"), as_real(p.alpha, "alpha"), as_real(p.theta, "theta")
    require(a > 0 and al > 0, "a > 0, alpha > 0")
    require(0 < th < PI, "0 < theta < pi")
    if a * abs(math.cos(th)) >= al and math.cos(th) < 0:
        raise sf.DomainError("real positive roots: denominator vanishes on the path")


def _e2_disc(p):
    a, al, th = float(p.a.real), float(p.alpha), float(p.theta)
    return csqrt(a * a - 2 * al * al + a * a * math.cos(2 * th))


def _e2_rhs(p):
    n = int(p.n)
    a, th = float(p.a.real), float(p.theta)
    D = _e2_disc(p)
    lo = a * math.cos(th) - D / math.sqrt(2.0)
    hi = a * math.cos(th) + D / math.sqrt(2.0)
    return (2.0 ** (0.5 + n) * (I * PI) ** (1 + n) / D
            * (_zh(-n, _zeta_arg(lo)) - _zh(-n, _zeta_arg(hi))))


def _e2_csc_kernel(s, alpha, theta):
    # alpha^(s-2) csc(pi s) sin((s-1) theta), removable at s = 1
    e = s - 1.0
    if abs(e) < 1e-3:
        ratio = -(theta / PI) * (1.0 + e * e * (PI * PI - theta * theta) / 6.0)
    else:
        ratio = cmath.sin(e * theta) / cmath.sin(PI * s)
    return cpow(alpha, s - 2.0) * ratio


def e2_derivative_form(p):
    """The d^n/ds^n closed form at s = 1 (requires a == alpha, n in {1, 2}).

    Implemented with a csc(theta) prefactor: the n = 0 reduction
    theta/(alpha sin theta) pins it, and E2's zeta form agrees numerically.
    """
    n = int(p.n)
    if n not in (1, 2):
        raise sf.DomainError("derivative form implemented for n in {1, 2}")
    al, th = float(p.alpha), float(p.theta)
    require(abs(float(p.a.real) - al) < 1e-14, "a == alpha for this form")
    F = lambda s: _e2_csc_kernel(s, al, th)
    steps = (4e-2, 2e-2, 1e-2)
    if n == 1:
        d = [(F(1 + h) - F(1 - h)) / (2 * h) for h in steps]
    else:
        d = [(F(1 + h) - 2 * F(1.0) + F(1 - h)) / (h * h) for h in steps]
    r1 = [(4 * d[i + 1] - d[i]) / 3 for i in range(2)]
    der = (16 * r1[1] - r1[0]) / 15
    return -PI / math.sin(th) * der


def _e2_lhs(p):
    n = int(p.n)
    a, al, th = float(p.a.real), float(p.alpha), float(p.theta)

    def f(x):
        return plog(x) ** n / (x * x + al * al + 2 * a * x * math.cos(th))

    return spec(f)


E2 = IdentityEntry(
    id="E2",
    statement=("int_0^inf log^n(x)/(x^2 + alpha^2 + 2 a x cos(theta)) dx = "
               "2^(1/2+n)(i pi)^(1+n)/sqrt(a^2 - 2 alpha^2 + a^2 cos(2 theta))"
               " * (zeta(-n, A_-) - zeta(-n, A_+)), A_-+ from the quadratic's"
               " roots; for a = alpha also "
               "-pi csc(theta) d^n/ds^n[alpha^(s-2) csc(s pi) "
               "sin((s-1) theta)] at s=1"),
    klass="regular",
    active=("n", "a", "alpha", "theta"),
    defaults={"n": 2, "a": 1.5, "alpha": 1.5, "theta": 2 * PI / 5},
    validate=_e2_validate,
    rhs=_e2_rhs,
    lhs=_e2_lhs,
    notes="derivative form uses csc(theta); the display's cos(theta) fails "
          "the n = 0 reduction",
)


# ---------------------------------------------------------------- E3
def _e3_validate(p):
    require(as_real(p.beta, "beta") > 0, "beta > 0")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")
    require(p.beta != p.gamma, "beta != gamma")


def _e3_rhs(p):
    b, g = complex(p.beta), complex(p.gamma)
    num = (clog(2 * PI) * clog(b / g)
           + 2j * PI * clog(cpow(b, 0.25) * _gamma(_zeta_arg(b))
                            / (cpow(g, 0.25) * _gamma(_zeta_arg(g)))))
    return num / (b - g)


def _e3_lhs(p):
    b, g = complex(p.beta), complex(p.gamma)

    def f(x):
        return loglog(x) / ((x + b) * (x + g))

    return spec(f, [sp(1.0, "branch-point")])


E3 = IdentityEntry(
    id="E3",
    statement=("int_0^inf log(log x)/((x+b)(x+g)) dx = (log(2 pi) log(b/g) "
               "+ 2 i pi log(b^(1/4) Gamma((pi-i log b)/(2 pi)) / "
               "(g^(1/4) Gamma((pi-i log g)/(2 pi))))) / (b-g)"),
    klass="complex-branch",
    active=("beta", "gamma"),
    defaults={"beta": 2.0, "gamma": 3.0},
    validate=_e3_validate,
    rhs=_e3_rhs,
    lhs=_e3_lhs,
)


# ---------------------------------------------------------------- E4
def _loglog_over(quad_px):
    def build(p):
        def f(x):
            return loglog(x) / quad_px(x)

        return spec(f, [sp(1.0, "branch-point")])

    return build


E4 = IdentityEntry(
    id="E4",
    statement=("int_0^inf log(log x)/(1+x^2) dx = "
               "(pi/2) log(2 i pi Gamma(3/4)^2 / Gamma(1/4)^2)"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: PI / 2 * clog(2j * PI * _gamma(0.75) ** 2 / _gamma(0.25) ** 2),
    lhs=_loglog_over(lambda x: 1 + x * x),
)

E5 = IdentityEntry(
    id="E5",
    statement=("int_0^inf log(log x)/(1+x+x^2) dx = "
               "(pi/sqrt 3) log(4 (-1)^(1/3) pi^(5/3) / Gamma(1/6)^2)"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: PI / math.sqrt(3) * clog(
        4 * neg_pow(1 / 3) * PI ** (5 / 3) / _gamma(1 / 6) ** 2),
    lhs=_loglog_over(lambda x: 1 + x + x * x),
)

E6 = IdentityEntry(
    id="E6",
    statement=("int_0^inf log(log x)/(1-x+x^2) dx = (2 pi/(3 sqrt 3)) "
               "(i pi + log(4 pi^2 Gamma(5/6)^3 / Gamma(1/6)^3))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: 2 * PI / (3 * math.sqrt(3)) * (
        I * PI + clog(4 * PI ** 2 * _gamma(5 / 6) ** 3 / _gamma(1 / 6) ** 3)),
    lhs=_loglog_over(lambda x: 1 - x + x * x),
)


def _e7_lhs(p):
    def f(x):
        return loglog(x) / (1 - x + x * x)

    return spec(f, [], domain=(1.0, math.inf))


E7 = IdentityEntry(
    id="E7",
    statement=("int_1^inf log(log x)/(1-x+x^2) dx = (pi/(3 sqrt 3)) "
               "log(4 pi^2 Gamma(5/6)^3 / Gamma(1/6)^3)"),
    klass="regular",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: PI / (3 * math.sqrt(3)) * clog(
        4 * PI ** 2 * _gamma(5 / 6) ** 3 / _gamma(1 / 6) ** 3),
    lhs=_e7_lhs,
)


# ---------------------------------------------------------------- E8
def _e8_validate(p):
    require(as_real(p.beta, "beta") > 0, "beta > 0")


def _e8_rhs(p):
    b = complex(p.beta)
    return PI / b * clog((1 + I) * math.sqrt(PI)
                         * _gamma((PI - I * clog(I * b)) / TWO_PI)
                         / _gamma((PI - I * clog(-I * b)) / TWO_PI))


def _e8_lhs(p):
    b = complex(p.beta)

    def f(x):
        return loglog(x) / (x * x + b * b)

    return spec(f, [sp(1.0, "branch-point")])


E8 = IdentityEntry(
    id="E8",
    statement=("int_0^inf log(log x)/(x^2+b^2) dx = (pi/b) log((1+i) sqrt(pi)"
               " Gamma((pi-i log(i b))/(2 pi)) / Gamma((pi-i log(-i b))/(2 pi)))"),
    klass="complex-branch",
    active=("beta",),
    defaults={"beta": 2.0},
    validate=_e8_validate,
    rhs=_e8_rhs,
    lhs=_e8_lhs,
)


# ---------------------------------------------------------------- E9
def _e9_validate(p):
    k, n = as_int(p.k, "k"), as_int(p.n, "n")
    require(k >= 0, "k >= 0")
    require(n >= 1, "n >= 1")


def _e9_rhs(p):
    k, n = int(p.k), int(p.n)
    zr = sf.riemann_zeta
    q1 = neg_pow(0.25)   # (-1)^(1/4)
    q3 = neg_pow(0.75)   # (-1)^(3/4)
    first = (1j ** k * 2.0 ** (2 * k - n) * PI ** (1 + k)
             * (q1 * (1 - I) ** n * _zh(-k, 3 / 8)
                - q1 * (1 - I) ** n * _zh(-k, 7 / 8)
                - q3 * (1 + I) ** n * (_zh(-k, 5 / 8) - _zh(-k, 9 / 8))))
    total = first
    for j in range(n):
        for pp in range(j + 1):
            S = sf.stirling_first(j, pp)
            if S == 0:
                continue
            for l in range(pp + 1):
                for h in range(pp - l + 1):
                    poch = sf.pochhammer(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += ((-1) ** (j - l) * 1j ** (k - h)
                              * 2.0 ** (-h + k + l - n - pp)
                              * ((1 - I) ** n * (1 + I) ** j
                                 + (1 - I) ** j * (1 + I) ** n)
                              / math.factorial(j)
                              * (-(2.0 ** h) + 2.0 ** (1 + k))
                              * PI ** (1 - h + k)
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              * poch * S * zr(h - k))
    return total


def _e9_lhs(p):
    k, n = int(p.k), int(p.n)

    def f(x):
        return psqrt(x) * plog(-x) ** k / ((1 + x * x) * (1 + x) ** n)

    return spec(f, note="log(-x) = log x + i pi")


E9 = IdentityEntry(
    id="E9",
    statement=("int_0^inf sqrt(x) log^k(-x)/((1+x^2)(1+x)^n) dx = "
               "i^k 2^(2k-n) pi^(1+k) ((-1)^(1/4)(1-i)^n (zeta(-k,3/8) - "
               "zeta(-k,7/8)) - (-1)^(3/4)(1+i)^n (zeta(-k,5/8) - "
               "zeta(-k,9/8))) + sum_(jplh) (-1)^(j-l) i^(k-h) "
               "2^(k-h+l-n-p) ((1-i)^n(1+i)^j + (1-i)^j(1+i)^n) "
               "(2^(1+k) - 2^h) pi^(1-h+k) C(p,l) C(p-l,h) (1-h+k)_h "
               "S_j^(p) zeta(h-k) / j!"),
    klass="complex-branch",
    active=("k", "n"),
    defaults={"k": 1, "n": 2},
    validate=_e9_validate,
    rhs=_e9_rhs,
    lhs=_e9_lhs,
)


# ---------------------------------------------------------------- E10
def _rational_exponent(x, name):
    try:
        return sf.RationalExponent.from_value(complex(x).real)
    except sf.DomainError as exc:
        raise sf.DomainError(f"{name}: {exc}") from exc


def _e10_validate(p):
    m, s = as_real(p.m, "m"), as_real(p.s, "s")
    require(0 < m < 1 and 0 < s < 1, "0 < m, s < 1 (m = 1 puts z = 1)")
    require(m != s, "m != s")
    _rational_exponent(m, "m")
    _rational_exponent(s, "s")
    n = as_int(p.n, "n")
    require(n >= 1, "n >= 1")
    require(as_real(p.b, "b") > 0, "b > 0")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")
    require(p.b != p.gamma, "b != gamma")


def _e10_rhs(p):
    m, s = float(p.m.real), float(p.s.real)
    n, b, g = int(p.n), complex(p.b), complex(p.gamma)
    zm = _rational_exponent(m, "m")
    zs = _rational_exponent(s, "s")
    Ab = phase_arg(0.0, b)
    Ag = phase_arg(0.0, g)
    em, es = neg_pow(m), neg_pow(s)
    total = (g - b) ** (-n) / b * (
        em * cpow(b, m) * sf.lerch_phi(zm, 1.0, Ab)
        - es * cpow(b, s) * sf.lerch_phi(zs, 1.0, Ab))
    cm, cs = {}, {}

    def phim(order):
        if order not in cm:
            cm[order] = sf.lerch_phi(zm, float(order), Ag)
        return cm[order]

    def phis(order):
        if order not in cs:
            cs[order] = sf.lerch_phi(zs, float(order), Ag)
        return cs[order]

    for j in range(n):
        for pp in range(j + 1):
            S = sf.stirling_first(j, pp)
            if S == 0:
                continue
            for l in range(pp + 1):
                for h in range(pp - l + 1):
                    mh = sf.pochhammer(-h, h)  # (-h)_h = (-1)^h h!
                    total += (I * (-1) ** (j - l) * 1j ** (-1 - h)
                              * m ** (-h - l) * (2 * PI) ** (-h)
                              * s ** (-h - l) * (1 - b / g) ** j
                              * (g - b) ** (-n)
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              / (g * math.factorial(j))
                              * (-em * m ** pp * s ** (h + l) * cpow(g, m)
                                 * phim(1 + h)
                                 + es * m ** (h + l) * s ** pp * cpow(g, s)
                                 * phis(1 + h))
                              * mh * S)
    return total


def _e10_lhs(p):
    m, s = float(p.m.real), float(p.s.real)
    n, b, g = int(p.n), complex(p.b), complex(p.gamma)

    def f(x):
        L = plog(x)
        ratio = np.exp((m - 1) * L) * cexpm1((s - m) * L) / np.where(L == 0, 1.0, L)
        return ratio * (x + g) ** (-n) / (b + x)

    return spec(f, [sp(1.0, "removable")])


E10 = IdentityEntry(
    id="E10",
    statement=("int_0^inf (x^(s-1)-x^(m-1))(x+g)^(-n)/((b+x) log x) dx = "
               "(g-b)^(-n)((-1)^m b^m Phi(e^(2 i m pi),1,A_b) - (-1)^s b^s "
               "Phi(e^(2 i pi s),1,A_b))/b + sum_(jplh) i (-1)^(j-l) "
               "i^(-1-h) m^(-h-l)(2 pi)^(-h) s^(-h-l)(1-b/g)^j (g-b)^(-n) "
               "C(p,l) C(p-l,h) (-(-1)^m m^p s^(h+l) g^m Phi(e^(2 i m pi),"
               "1+h,A_g) + (-1)^s m^(h+l) s^p g^s Phi(e^(2 i pi s),1+h,A_g))"
               " (-h)_h S_j^(p) / (g j!)"),
    klass="regular",
    active=("m", "s", "n", "b", "gamma"),
    defaults={"m": 0.5, "s": 0.25, "n": 2, "b": 1.0, "gamma": 2.0},
    validate=_e10_validate,
    rhs=_e10_rhs,
    lhs=_e10_lhs,
)


# ---------------------------------------------------------------- E11
def _e11_validate(p):
    n = as_int(p.n, "n")
    require(1 <= n <= 3, "1 <= n <= 3 (H_(2-h) defined)")
    require(as_real(p.b, "b") > 0, "b > 0")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")
    require(p.b != p.gamma, "b != gamma")


def _e11_rhs(p):
    n, b, g = int(p.n), complex(p.b), complex(p.gamma)
    total = 14 * PI * (g - b) ** (-n) * sf.constants().apery / csqrt(b)
    arg4 = (4 * PI + I * clog(b) - I * clog(g)) / (4 * PI)
    arg4b = -I * (2j * PI - clog(b) + clog(g)) / (4 * PI)
    arg2 = -I * (2j * PI - clog(b) + clog(g)) / TWO_PI
    for j in range(n):
        for pp in range(j + 1):
            S = sf.stirling_first(j, pp)
            if S == 0:
                continue
            for l in range(pp + 1):
                for h in range(pp - l + 1):
                    poch3 = sf.pochhammer(3 - h, h)
                    if poch3 == 0:
                        continue
                    hterm = sf.harmonic(2 - h)
                    zdiff = _zh(-2 + h, arg4) - _zh(-2 + h, arg4b)
                    phi_d = sf.lerch_phi_s_derivative((1, 2), -2.0 + h, arg2)
                    total -= ((-1) ** (j - l) * 1j ** (-h)
                              * 2.0 ** (3 - h + l - pp) * PI ** (3 - h)
                              * (1 - b / g) ** j * (g - b) ** (-n)
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              * poch3 * S
                              / (csqrt(g) * math.factorial(j))
                              * (2 * zdiff
                                 * (3 + I * PI - 2 * hterm + clog(4) + 2 * clog(PI))
                                 + 2.0 ** h * phi_d))
    return total


def _e11_lhs(p):
    n, b, g = int(p.n), complex(p.b), complex(p.gamma)

    def f(x):
        w = plog(-x / b)          # log x - log b + i pi, never on a cut
        return (x + g) ** (-n) * w * w * np.log(w) / (psqrt(x) * (b + x))

    return spec(f)


E11 = IdentityEntry(
    id="E11",
    statement=("int_0^inf (x+g)^(-n) log^2(-x/b) log(log(-x/b)) / "
               "(sqrt(x)(b+x)) dx = 14 pi (g-b)^(-n) zeta(3)/sqrt(b) "
               "- sum_(jplh) (-1)^(j-l) i^(-h) 2^(3-h+l-p) pi^(3-h) "
               "(1-b/g)^j (g-b)^(-n) C(p,l) C(p-l,h) (3-h)_h S_j^(p) "
               "(2 (zeta(-2+h, 1+(i log(b/g))/(4 pi)) - zeta(-2+h, "
               "1/2+(i log(b/g))/(4 pi))) (3 + i pi - 2 H_(2-h) + log 4 + "
               "2 log pi) + 2^h Phi'(-1, -2+h, 1/2+(i log(b/g))/(2 pi))) / "
               "(sqrt(g) j!)"),
    klass="complex-branch",
    active=("n", "b", "gamma"),
    defaults={"n": 2, "b": 1.0, "gamma": 2.0},
    validate=_e11_validate,
    rhs=_e11_rhs,
    lhs=_e11_lhs,
)


# ---------------------------------------------------------------- E12
def _e12_validate(p):
    k = as_int(p.k, "k")
    require(k >= 0, "k >= 0")
    b = as_real(p.b, "b")
    require(abs(b) < 2, "|b| < 2 (no real pole)")


def _e12_rhs(p):
    k, b = int(p.k), complex(p.b)
    D = csqrt(b * b - 4.0)
    lo = (-b - D) / 2.0
    hi = (-b + D) / 2.0
    return ((-1.0) ** k * (2 * PI) ** (2 * (1 + k)) / D
            * (-_zh(-1 - 2 * k, _zeta_arg(lo)) + _zh(-1 - 2 * k, _zeta_arg(hi))))


def _e12_lhs(p):
    k, b = int(p.k), complex(p.b)

    def f(x):
        return plog(x) ** (1 + 2 * k) / (1 - b * x + x * x)

    return spec(f)


E12 = IdentityEntry(
    id="E12",
    statement=("int_0^inf log^(1+2k)(x)/(1-b x+x^2) dx = i^(2k)"
               "(2 pi)^(2(1+k))/sqrt(b^2-4) (zeta(-1-2k, A(root+)) - "
               "zeta(-1-2k, A(root-)))"),
    klass="regular",
    active=("k", "b"),
    defaults={"k": 1, "b": 1.0},
    validate=_e12_validate,
    rhs=_e12_rhs,
    lhs=_e12_lhs,
)


# ---------------------------------------------------------------- E13
def _sqrt_loglog_over_pow(nexp):
    def build(p):
        def f(x):
            return psqrt(x) * loglog(x) / (1 + x) ** nexp

        return spec(f, [sp(1.0, "branch-point")])

    return build


E13 = IdentityEntry(
    id="E13",
    statement=("int_0^inf sqrt(x) log(log x)/(1+x)^2 dx = "
               "pi log((1/3+i/3) e^(-i/2) sqrt(2 pi) Gamma(-1/4)/Gamma(-3/4))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: PI * clog((1 / 3 + I / 3) * cmath.exp(-I / 2)
                            * math.sqrt(2 * PI) * _gamma(-0.25) / _gamma(-0.75)),
    lhs=_sqrt_loglog_over_pow(2),
)


# ---------------------------------------------------------------- E14
def _e14_validate(p):
    # at k = 0 the display telescopes to (0)_{n-1} * (continuation pole):
    # the printed sum returns 0 while the integral is gamma^(1-n)/(n-1)
    require(as_real(p.k, "k") > 0, "k > 0")
    n = as_int(p.n, "n")
    require(n >= 2, "n >= 2 (decay at infinity)")
    require(as_real(p.a, "a") > 0, "a > 0")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")


def _e14_sum(k, g, n, zeta_like):
    total = 0j
    for j in range(n):
        for pp in range(j + 1):
            S = sf.stirling_first(j, pp)
            if S == 0:
                continue
            for l in range(pp + 1):
                for h in range(pp - l + 1):
                    poch = sf.pochhammer(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += ((-1) ** (j - l) * 2.0 ** (1 - 2 * h + k - l + pp)
                              * cpow(I * PI, 1 - h + k) * cpow(g, 1 - n)
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              / math.factorial(j)
                              * zeta_like(h - k) * poch * S)
    return total


def _e14_rhs(p):
    k, a, g, n = p.k, complex(p.a), complex(p.gamma), int(p.n)
    arg = phase_arg(clog(a), g)
    return _e14_sum(k, g, n, lambda order: _zh(order, arg))


def _e14_lhs(p):
    k, a, g, n = p.k, complex(p.a), complex(p.gamma), int(p.n)
    ki = int(k) if float(k) == int(k) else None

    def f(x):
        L = plog(a * x)
        pw = L ** ki if ki is not None else ppow(L, k)
        return pw / ((x + g) ** n)

    sings = [] if ki is not None else [sp(1.0 / float(a.real), "branch-point")]
    return spec(f, sings)


E14 = IdentityEntry(
    id="E14",
    statement=("int_0^inf log^k(a x)/(x+g)^n dx = sum_(jplh) (-1)^(j-l) "
               "2^(1-2h+k-l+p) (i pi)^(1-h+k) g^(1-n) C(p,l) C(p-l,h) "
               "zeta(h-k, (pi - i log(a g))/(2 pi)) (1-h+k)_h S_j^(p) / j!"),
    klass="regular",
    active=("k", "a", "n", "gamma"),
    defaults={"k": 2, "a": 1.0, "n": 2, "gamma": 3.0},
    validate=_e14_validate,
    rhs=_e14_rhs,
    lhs=_e14_lhs,
)


# ---------------------------------------------------------------- E15
def _e15_validate(p):
    require(as_real(p.k, "k") > 0, "k > 0")
    n = as_int(p.n, "n")
    require(n >= 2, "n >= 2 (decay at infinity)")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")


def _e15_rhs(p):
    k, g, n = p.k, complex(p.gamma), int(p.n)
    # zeta(s, 1/2) = (2^s - 1) zeta(s): the a = 1/gamma specialization
    return _e14_sum(k, g, n,
                    lambda order: (2.0 ** order - 1.0) * sf.riemann_zeta(order))


def _e15_lhs(p):
    k, g, n = p.k, complex(p.gamma), int(p.n)
    ki = int(k) if float(k) == int(k) else None

    def f(x):
        L = plog(x / g)
        pw = L ** ki if ki is not None else ppow(L, k)
        return pw * (x + g) ** (-n)

    sings = [] if ki is not None else [sp(float(g.real), "branch-point")]
    return spec(f, sings)


E15 = IdentityEntry(
    id="E15",
    statement=("int_0^inf (x+g)^(-n) log^k(x/g) dx = sum_(jplh) (-1)^(j-l) "
               "2^(1-2h+k-l+p) (2^(h-k)-1) (i pi)^(1-h+k) g^(1-n) C(p,l) "
               "C(p-l,h) (1-h+k)_h S_j^(p) zeta(h-k) / j!"),
    klass="regular",
    active=("k", "n", "gamma"),
    defaults={"k": 2, "n": 2, "gamma": 2.0},
    validate=_e15_validate,
    rhs=_e15_rhs,
    lhs=_e15_lhs,
    notes="displayed comma between the sides read as an equality",
)

ENTRIES = [E1, E2, E3, E4, E5, E6, E7, E8, E9, E10, E11, E12, E13, E14, E15]
