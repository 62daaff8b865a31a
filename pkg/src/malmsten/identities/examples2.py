"""Catalog entries E16-E29: reciprocal-sqrt-log forms, parameter-free
Malmsten evaluations, and the two-factor Lerch difference entries."""

import cmath
import math

import numpy as np

from .. import specfun as sf
from ..branching import PI, plog, ppow, psqrt, loglog
from .base import (IdentityEntry, clog, cpow, csqrt, neg_pow, phase_arg,
                   spec, sp)
from .params import require, as_int, as_real

I = 1j
TWO_PI = 2.0 * PI


def _gamma(z):
    return sf.gamma_fn(z)


def _lg(z):
    return sf.log_gamma(z)


# ---------------------------------------------------------------- E16
def _e16_validate(p):
    n = as_int(p.n, "n")
    require(n >= 2, "n >= 2 (decay at infinity)")


def _e16_rhs(p):
    n = int(p.n)
    zr, zd = sf.riemann_zeta, sf.zeta_derivative
    psi = lambda x: sf.polygamma(0, x)
    r2 = math.sqrt(2.0)
    total = 0j
    for j in range(n):
        for pp in range(j + 1):
            S = sf.stirling_first(j, pp)
            if S == 0:
                continue
            for l in range(pp + 1):
                for h in range(pp - l + 1):
                    poch = sf.pochhammer(0.5 - h, h)
                    if poch == 0:
                        continue
                    w = 2.0 ** (1 + h)
                    bracket = ((r2 * math.log(2.0)
                                + (r2 - w) * (clog(I * PI) + psi(0.5))
                                + (-r2 + w) * psi(0.5 - h)) * zr(0.5 + h)
                               + (-r2 + w) * zd(0.5 + h))
                    total -= (neg_pow(0.25 + j - l) * 1j ** (-h)
                              * 2.0 ** (-2 * h - l + pp) * PI ** (0.5 - h)
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              * poch * S / math.factorial(j) * bracket)
    return total


def _one_offsets(build_right, build_left):
    return {(1.0, 1.0): build_right, (1.0, -1.0): build_left}


def _e16_lhs(p):
    n = int(p.n)

    def f(x):
        return loglog(x) / ((1 + x) ** n * psqrt(plog(x)))

    def right(u):
        L = np.log1p(u)
        return np.log(L) / ((2.0 + u) ** n * np.sqrt(L))

    def left(u):
        L = -np.log1p(-u)  # |log x|, positive
        return (np.log(L) + I * PI) / ((2.0 - u) ** n * 1j * np.sqrt(L))

    return spec(f, [sp(1.0, "algebraic"), sp(1.0, "branch-point")],
                offsets=_one_offsets(right, left))


E16 = IdentityEntry(
    id="E16",
    statement=("int_0^inf (1+x)^(-n) log(log x)/sqrt(log x) dx = "
               "-sum_(jplh) (-1)^(1/4+j-l) i^(-h) 2^(p-2h-l) pi^(1/2-h) "
               "C(p,l) C(p-l,h) (1/2-h)_h S_j^(p) ((sqrt2 log2 + "
               "(sqrt2-2^(1+h))(log(i pi)+psi(1/2)) + (2^(1+h)-sqrt2)"
               "psi(1/2-h)) zeta(1/2+h) + (2^(1+h)-sqrt2) zeta'(1/2+h)) / j!"),
    klass="complex-branch",
    active=("n",),
    defaults={"n": 2},
    validate=_e16_validate,
    rhs=_e16_rhs,
    lhs=_e16_lhs,
)


# ---------------------------------------------------------------- E17
def _e17_rhs(p):
    r2 = math.sqrt(2.0)
    z32 = sf.riemann_zeta(1.5)
    zd32 = sf.zeta_derivative(1.5)
    return (neg_pow(0.75)
            * ((8 - 2 * r2 + 0.5j * (-4 + r2) * PI - 4 * math.log(PI)
                + r2 * math.log(2 * PI)) * z32 - (-4 + r2) * zd32)
            / (4 * math.sqrt(PI)))


def _e17_lhs(p):
    def f(x):
        return loglog(x) / ((1 + x) ** 2 * psqrt(plog(x)))

    def right(u):
        L = np.log1p(u)
        return np.log(L) / ((2.0 + u) ** 2 * np.sqrt(L))

    def left(u):
        L = -np.log1p(-u)
        return (np.log(L) + I * PI) / ((2.0 - u) ** 2 * 1j * np.sqrt(L))

    return spec(f, [sp(1.0, "algebraic"), sp(1.0, "branch-point")],
                offsets=_one_offsets(right, left))


E17 = IdentityEntry(
    id="E17",
    statement=("int_0^inf log(log x)/((1+x)^2 sqrt(log x)) dx = (-1)^(3/4) "
               "((8 - 2 sqrt2 + (i/2)(sqrt2-4) pi - 4 log pi + sqrt2 "
               "log(2 pi)) zeta(3/2) - (sqrt2-4) zeta'(3/2)) / (4 sqrt pi)"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_e17_rhs,
    lhs=_e17_lhs,
)


# ---------------------------------------------------------------- E18
def _rational_exp(x, name):
    try:
        return sf.RationalExponent.from_value(complex(x).real)
    except sf.DomainError as exc:
        raise sf.DomainError(f"{name}: {exc}") from exc


def _e18_validate(p):
    m, s = as_real(p.m, "m"), as_real(p.s, "s")
    require(0 < m < 1 and 0 < s < 1, "0 < m, s < 1 (m = 1 puts z = 1)")
    require(m != s, "m != s")
    _rational_exp(m, "m")
    _rational_exp(s, "s")
    require(as_int(p.n, "n") >= 1, "n >= 1")
    require(as_real(p.a, "a") > 0, "a > 0")
    require(as_real(p.b, "b") > 0, "b > 0")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")
    require(p.b != p.gamma, "b != gamma")


def _e18_rhs(p):
    m, s = float(p.m.real), float(p.s.real)
    n, a = int(p.n), float(p.a.real)
    b, g = complex(p.b), complex(p.gamma)
    zm, zs = _rational_exp(m, "m"), _rational_exp(s, "s")

    def A(t):
        return -I * (I * PI + a + clog(t)) / TWO_PI

    em, es = neg_pow(m), neg_pow(s)
    total = (g - b) ** (-n) * (
        -em * cpow(b, m) * sf.lerch_phi(zm, 1.0, A(b))
        + es * cpow(b, s) * sf.lerch_phi(zs, 1.0, A(b)))
    cm, cs = {}, {}

    def phim(o):
        if o not in cm:
            cm[o] = sf.lerch_phi(zm, float(o), A(g))
        return cm[o]

    def phis(o):
        if o not in cs:
            cs[o] = sf.lerch_phi(zs, float(o), A(g))
        return cs[o]

    for j in range(n):
        for pp in range(j + 1):
            S = sf.stirling_first(j, pp)
            if S == 0:
                continue
            for l in range(pp + 1):
                for h in range(pp - l + 1):
                    mh = sf.pochhammer(-h, h)
                    total -= ((g - b) ** (-n) * (-1) ** (j - l)
                              * (1 + m) ** (-h - l) * (2j * PI) ** (-h)
                              * (1 + s) ** (-h - l) * (1 - b / g) ** j
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              / math.factorial(j)
                              * (-em * (1 + m) ** pp * (1 + s) ** (h + l)
                                 * cpow(g, m) * phim(1 + h)
                                 + es * (1 + m) ** (h + l) * (1 + s) ** pp
                                 * cpow(g, s) * phis(1 + h))
                              * mh * S)
    return total


def _e18_lhs(p):
    m, s = float(p.m.real), float(p.s.real)
    n, a = int(p.n), float(p.a.real)
    b, g = complex(p.b), complex(p.gamma)
    x0 = math.exp(-a)

    def f(x):
        return (-ppow(x, m) + ppow(x, s)) * (x + g) ** (-n) / ((b + x) * (a + plog(x)))

    return spec(f, [sp(x0, "simple-pole")])


E18 = IdentityEntry(
    id="E18",
    statement=("int_0^inf (x^s - x^m)(x+g)^(-n)/((b+x)(a+log x)) dx = "
               "(g-b)^(-n)((-1)^s b^s Phi(e^(2 i pi s),1,A_b) - (-1)^m b^m "
               "Phi(e^(2 i m pi),1,A_b)) - sum_(jplh) (...) with "
               "A_t = (pi - i(a + log t) i ... )/(2 pi); pole at e^(-a) "
               "taken over the upper arc"),
    klass="regular",
    active=("m", "s", "n", "a", "b", "gamma"),
    defaults={"m": 0.5, "s": 0.25, "n": 1, "a": 1.0, "b": 1.0, "gamma": 2.0},
    validate=_e18_validate,
    rhs=_e18_rhs,
    lhs=_e18_lhs,
)


# ---------------------------------------------------------------- E19
def _e19_rhs(p):
    return PI / 4 * (
        2 * (math.sqrt(2.0) - 2.0) * clog(I * PI)
        + math.sqrt(2.0) * math.log(16.0)
        + 4 * neg_pow(0.25) * clog(3 * _gamma(-3 / 8) / (7 * _gamma(-7 / 8)))
        + 8 * clog(3 * _gamma(-0.75) / (2 * _gamma(-0.25)))
        + 4 * neg_pow(0.75) * clog(5 * _gamma(-5 / 8) / _gamma(-1 / 8)))


def _e19_lhs(p):
    def f(x):
        return (x - 1) * loglog(x) / (psqrt(x) * (1 + x) * (1 + x * x))

    return spec(f, [], domain=(0.0, 1.0))


E19 = IdentityEntry(
    id="E19",
    statement=("int_0^1 (x-1) log(log x)/(sqrt(x)(1+x)(1+x^2)) dx = (pi/4)"
               "(2(sqrt2-2) log(i pi) + sqrt2 log 16 + 4(-1)^(1/4) "
               "log(3 Gamma(-3/8)/(7 Gamma(-7/8))) + 8 log(3 Gamma(-3/4)/"
               "(2 Gamma(-1/4))) + 4(-1)^(3/4) log(5 Gamma(-5/8)/Gamma(-1/8)))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_e19_rhs,
    lhs=_e19_lhs,
)


# ------------------------------------------------- E20, E21, E22, E24
def _sqrt_loglog_pow(nexp):
    def build(p):
        def f(x):
            return psqrt(x) * loglog(x) / (1 + x) ** nexp

        return spec(f, [sp(1.0, "branch-point")])

    return build


E20 = IdentityEntry(
    id="E20",
    statement=("int_0^inf sqrt(x) log(log x)/(1+x)^4 dx = -C/(2 pi) + "
               "(pi/96)(3 i pi + 2(2 i + log(64 pi^3/729) - 6 lnGamma(-3/4)"
               " + 6 lnGamma(-1/4)))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: (-sf.constants().catalan / (2 * PI)
                   + PI / 96 * (3j * PI + 2 * (2j + math.log(64 * PI ** 3 / 729)
                                               - 6 * _lg(-0.75) + 6 * _lg(-0.25)))),
    lhs=_sqrt_loglog_pow(4),
)

E21 = IdentityEntry(
    id="E21",
    statement=("int_0^inf sqrt(x) log(log x)/(1+x)^5 dx = (1/(3072 pi^3))"
               "(-896 C pi^2 + 60 i pi^5 - 8 pi^4 (-16 i + 30 log3 - "
               "15 log4 - 15 log pi + 30 lnGamma(-3/4) - 30 lnGamma(-1/4)) "
               "+ psi'''(1/4) - psi'''(3/4))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: (1 / (3072 * PI ** 3)) * (
        -896 * sf.constants().catalan * PI ** 2 + 60j * PI ** 5
        - 8 * PI ** 4 * (-16j + 30 * math.log(3.0) - 15 * math.log(4.0)
                         - 15 * math.log(PI) + 30 * _lg(-0.75) - 30 * _lg(-0.25))
        + sf.polygamma(3, 0.25) - sf.polygamma(3, 0.75)),
    lhs=_sqrt_loglog_pow(5),
)

E22 = IdentityEntry(
    id="E22",
    statement=("int_0^inf sqrt(x) log(log x)/(1+x)^2 dx = pi log(2 "
               "(-1)^(1/4) e^(-i/2) sqrt(pi) Gamma(-1/4)/(3 Gamma(-3/4)))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: PI * clog(2 * neg_pow(0.25) * cmath.exp(-I / 2)
                            * math.sqrt(PI) * _gamma(-0.25) / (3 * _gamma(-0.75))),
    lhs=_sqrt_loglog_pow(2),
    notes="same integral as E13; the two printed closed forms coincide",
)

E24 = IdentityEntry(
    id="E24",
    statement=("int_0^inf sqrt(x) log(log x)/(1+x)^3 dx = -C/pi + (pi/4) "
               "log(2 e^(i pi/4) sqrt(pi) Gamma(-1/4)/(3 Gamma(-3/4)))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: (-sf.constants().catalan / PI
                   + PI / 4 * clog(2 * cmath.exp(I * PI / 4) * math.sqrt(PI)
                                   * _gamma(-0.25) / (3 * _gamma(-0.75)))),
    lhs=_sqrt_loglog_pow(3),
)


# ---------------------------------------------------------------- E23
def _e23_lhs(p):
    def f(t):
        return loglog(np.tan(t))

    return spec(f, [sp(PI / 4, "branch-point")], domain=(0.0, PI / 2))


def e23_algebraic_image(p):
    """E23 after x = tan t: the E4 integrand over (0, inf)."""

    def f(x):
        return loglog(x) / (1 + x * x)

    return spec(f, [sp(1.0, "branch-point")])


E23 = IdentityEntry(
    id="E23",
    statement=("int_0^(pi/2) log(log(tan t)) dt = pi log((1+i) sqrt(pi) "
               "Gamma(-1/4)/(3 Gamma(-3/4)))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: PI * clog((1 + I) * math.sqrt(PI) * _gamma(-0.25)
                            / (3 * _gamma(-0.75))),
    lhs=_e23_lhs,
)


# ---------------------------------------------------------------- E25
def _e25_validate(p):
    m, s = as_real(p.m, "m"), as_real(p.s, "s")
    require(0 < m < 1 and 0 < s < 1 and m != s, "0 < m, s < 1, m != s")
    _rational_exp(m, "m")
    _rational_exp(s, "s")
    require(as_int(p.k, "k") >= 0, "k >= 0")
    require(as_int(p.n, "n") >= 1, "n >= 1")
    require(as_real(p.a, "a") > 0, "a > 0")
    for nm in ("b", "c", "gamma"):
        require(as_real(getattr(p, nm), nm) > 0, f"{nm} > 0")
    require(p.b != p.c, "b != c")
    require(p.gamma != p.b and p.gamma != p.c, "gamma not in {b, c}")


def _e25_rhs(p):
    m, s = float(p.m.real), float(p.s.real)
    k, n, a = int(p.k), int(p.n), float(p.a.real)
    b, c, g = complex(p.b), complex(p.c), complex(p.gamma)
    zm, zs = _rational_exp(m, "m"), _rational_exp(s, "s")
    la = math.log(a)

    def A(t):
        return phase_arg(la, t)

    em, es = neg_pow(m), neg_pow(s)
    first = ((2j * PI) ** (1 + k) * (g - b) ** (-n) * (g - c) ** (-n) / (b - c)
             * ((g - c) ** n * (em * cpow(b, m) * sf.lerch_phi(zm, -float(k), A(b))
                                - es * cpow(b, s) * sf.lerch_phi(zs, -float(k), A(b)))
                - (g - b) ** n * (em * cpow(c, m) * sf.lerch_phi(zm, -float(k), A(c))
                                  - es * cpow(c, s) * sf.lerch_phi(zs, -float(k), A(c)))))
    total = first
    cm, cs = {}, {}

    def phim(o):
        if o not in cm:
            cm[o] = sf.lerch_phi(zm, float(o), A(g))
        return cm[o]

    def phis(o):
        if o not in cs:
            cs[o] = sf.lerch_phi(zs, float(o), A(g))
        return cs[o]

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
                    total += (I * (-1) ** (j - l) * 1j ** (k - h)
                              * (1 + m) ** (-h - l) * (2 * PI) ** (1 - h + k)
                              * (1 + s) ** (-h - l)
                              * (g - b) ** (-n) * (g - c) ** (-n)
                              / ((b - c) * math.factorial(j))
                              * ((1 - c / g) ** j * (g - b) ** n
                                 - (1 - b / g) ** j * (g - c) ** n)
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              * (em * (1 + m) ** pp * (1 + s) ** (h + l)
                                 * cpow(g, m) * phim(h - k)
                                 - es * (1 + m) ** (h + l) * (1 + s) ** pp
                                 * cpow(g, s) * phis(h - k))
                              * poch * S)
    return total


def _e25_lhs(p):
    m, s = float(p.m.real), float(p.s.real)
    k, n, a = int(p.k), int(p.n), float(p.a.real)
    b, c, g = complex(p.b), complex(p.c), complex(p.gamma)

    def f(x):
        return ((-ppow(x, m) + ppow(x, s)) * (x + g) ** (-n)
                * plog(a * x) ** k / ((b + x) * (c + x)))

    return spec(f)


E25 = IdentityEntry(
    id="E25",
    statement=("int_0^inf (x^s - x^m)(x+g)^(-n) log^k(a x)/((b+x)(c+x)) dx:"
               " boundary bracket [(g-c)^n ((-1)^m b^m Phi_m(-k,A_b) - "
               "(-1)^s b^s Phi_s(-k,A_b)) - (b <-> c)] times "
               "(2 i pi)^(1+k)(g-b)^(-n)(g-c)^(-n)/(b-c), plus the gamma "
               "quadruple sum with ((1-c/g)^j (g-b)^n - (1-b/g)^j (g-c)^n)"),
    klass="regular",
    active=("m", "s", "k", "n", "a", "b", "c", "gamma"),
    defaults={"m": 0.5, "s": 0.25, "k": 1, "n": 1, "a": 1.0, "b": 1.0,
              "c": 2.0, "gamma": 3.0},
    validate=_e25_validate,
    rhs=_e25_rhs,
    lhs=_e25_lhs,
    notes="display grouping repaired: the b/c boundary bracket multiplies "
          "the prefactor line, not the j-sum",
)


# ------------------------------------------------- E26, E27, E28, E29
def _one_minus_x_family(denom, extra_sing=()):
    def build(p):
        def f(x):
            return (1 - x) * loglog(x) / (psqrt(x) * denom(x))

        return spec(f, [sp(1.0, "branch-point"), *extra_sing])

    return build


E26 = IdentityEntry(
    id="E26",
    statement=("int_0^inf (1-x) log(log x)/(sqrt(x)(1+x+x^2)) dx = "
               "-pi (4 pi + i (log(1728/25) + 2 log pi - 2 (lnGamma(-5/6) + "
               "lnGamma(-1/6))))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: -PI * (4 * PI + I * (math.log(1728.0 / 25.0)
                                       + 2 * math.log(PI)
                                       - 2 * (_lg(-5 / 6) + _lg(-1 / 6)))),
    lhs=_one_minus_x_family(lambda x: 1 + x + x * x),
)

E27 = IdentityEntry(
    id="E27",
    statement=("int_0^inf (1-x) log(log x)/(sqrt(x)(1+x)^2(1+x+x^2)) dx = "
               "(pi/6)(6 i - 3 i (sqrt3 - 2) pi - 16 sqrt3 log 2 - "
               "(24+3 i) log 3 + 3(4-3 sqrt3) log pi + 6 log(16 "
               "Gamma(-1/4)^4/Gamma(-3/4)^4) + 6 sqrt3 log(5 Gamma(-5/6) "
               "Gamma(1/6)/Gamma(-1/6)))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: PI / 6 * (
        6j - 3j * (-2 + math.sqrt(3.0)) * PI - 16 * math.sqrt(3.0) * math.log(2.0)
        - (24 + 3j) * math.log(3.0) + 3 * (4 - 3 * math.sqrt(3.0)) * math.log(PI)
        + 6 * clog(16 * _gamma(-0.25) ** 4 / _gamma(-0.75) ** 4)
        + 6 * math.sqrt(3.0) * clog(5 * _gamma(-5 / 6) * _gamma(1 / 6)
                                    / _gamma(-1 / 6))),
    lhs=_one_minus_x_family(lambda x: (1 + x) ** 2 * (1 + x + x * x)),
)

E28 = IdentityEntry(
    id="E28",
    statement=("int_0^inf (1-x) log(log x)/(sqrt(x)(1+x)^2(1-x+x^2)) dx = "
               "(pi/18)(6 i + 3 i pi + 2 i sqrt3 arccosh(2) + 6 log(4 pi "
               "Gamma(-1/4)^2/(3^(3/2) Gamma(-3/4)^2)))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: PI / 18 * (
        6j + 3j * PI + 2j * math.sqrt(3.0) * math.acosh(2.0)
        + 6 * clog(4 * PI * _gamma(-0.25) ** 2
                   / (3.0 ** 1.5 * _gamma(-0.75) ** 2))),
    lhs=_one_minus_x_family(lambda x: (1 + x) ** 2 * (1 - x + x * x)),
)


def e29_second_form(p):
    """The companion display 2 int_0^inf (1-x^2) log(log x)/(1+x^2)^2 dx."""

    def f(x):
        return 2.0 * (1 - x * x) * loglog(x) / (1 + x * x) ** 2

    return spec(f, [sp(1.0, "branch-point")])


E29 = IdentityEntry(
    id="E29",
    statement=("int_0^inf (1-x) log(log x)/(sqrt(x)(1+x)^2) dx = "
               "2 int_0^inf (1-x^2) log(log x)/(1+x^2)^2 dx = i pi"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=lambda p: I * PI,
    lhs=_one_minus_x_family(lambda x: (1 + x) ** 2),
)

ENTRIES = [E16, E17, E18, E19, E20, E21, E22, E23, E24, E25, E26, E27, E28, E29]
