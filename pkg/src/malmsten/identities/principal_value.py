"""Catalog entries P1-P12: integrands with poles on the integration path.

Every printed value in this family corresponds to deforming the path onto an
upper semicircular arc at each positive-real pole (equivalently PV - i pi Res
for an analytic simple pole); P9 alone carries the mirrored (lower)
orientation.  Double poles at the log branch point are the finite-part class.
"""

import math

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


def _rational_exp(x, name):
    try:
        return sf.RationalExponent.from_value(complex(x).real)
    except sf.DomainError as exc:
        raise sf.DomainError(f"{name}: {exc}") from exc


def _phi(ze, order, arg):
    return sf.lerch_phi(ze, float(order), arg)


# ---------------------------------------------------------------- P1
def _p1_validate(p):
    m, s = as_real(p.m, "m"), as_real(p.s, "s")
    require(-1 < m < 1 and -1 < s < 1, "-1 < Re(m) < 1, -1 < Re(s) < 1")
    require(m != 0 and s != 0 and m != s, "m, s nonzero and distinct")
    _rational_exp(m, "m")
    _rational_exp(s, "s")
    require(as_int(p.k, "k") >= 0, "k >= 0")
    require(as_real(p.a, "a") > 0, "a > 0")
    require(as_real(p.b, "b") > 0, "Im(b) >= 0, here b > 0")


def _p1_rhs(p):
    m, s = float(p.m.real), float(p.s.real)
    k, a, b = int(p.k), float(p.a.real), complex(p.b)
    zm, zs = _rational_exp(m, "m"), _rational_exp(s, "s")
    la = math.log(a)
    em, es = neg_pow(m), neg_pow(s)
    Amb, Ab = phase_arg(la, -b), phase_arg(la, b)
    return -(2.0 ** k * (I * PI) ** (1 + k) / b) * (
        em * cpow(-b, m) * _phi(zm, -k, Amb)
        - em * cpow(b, m) * _phi(zm, -k, Ab)
        + es * (-cpow(-b, s) * _phi(zs, -k, Amb)
                + cpow(b, s) * _phi(zs, -k, Ab)))


def _p1_lhs(p):
    m, s = float(p.m.real), float(p.s.real)
    k, a, b = int(p.k), float(p.a.real), float(p.b.real)

    def f(x):
        return (ppow(x, m) - ppow(x, s)) * plog(a * x) ** k / (b * b - x * x)

    return spec(f, [sp(b, "simple-pole")])


P1 = IdentityEntry(
    id="P1",
    statement=("int_0^inf (x^m - x^s) log^k(a x)/(b^2-x^2) dx = "
               "-(2^k (i pi)^(1+k)/b)((-1)^m (-b)^m Phi_m(-k,A(-b)) - "
               "(-1)^m b^m Phi_m(-k,A(b)) + (-1)^s (b^s Phi_s(-k,A(b)) - "
               "(-b)^s Phi_s(-k,A(-b))))"),
    klass="pv",
    active=("m", "s", "k", "a", "b"),
    defaults={"m": 0.5, "s": 0.25, "k": 1, "a": 1.0, "b": 1.5},
    validate=_p1_validate,
    rhs=_p1_rhs,
    lhs=_p1_lhs,
)


# ---------------------------------------------------------------- P2
def _p2_rhs(p):
    g1 = sf.stieltjes_gamma(1, 0.25) - sf.stieltjes_gamma(1, 0.75)
    return (PI ** 2 - 2j * PI * math.log(4 * PI) - 2j * g1) / 4.0


def _p2_lhs(p):
    def f(x):
        return loglog(x) / (psqrt(x) * (x + 1) * plog(x))

    return spec(f, [sp(1.0, "simple-pole"), sp(1.0, "branch-point")])


P2 = IdentityEntry(
    id="P2",
    statement=("int_0^inf log(log x)/(sqrt(x)(x+1) log x) dx = (1/4)(pi^2 "
               "- 2 i pi log(4 pi) - 2 i (gamma_1(1/4) - gamma_1(3/4)))"),
    klass="pv",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_p2_rhs,
    lhs=_p2_lhs,
)


# ---------------------------------------------------------------- P3
def _p3_validate(p):
    m, s = as_real(p.m, "m"), as_real(p.s, "s")
    require(-1 < m < 1 and -1 < s < 1 and m * s != 0 and m != s,
            "-1 < m, s < 1 nonzero, distinct")
    _rational_exp(m, "m")
    _rational_exp(s, "s")
    a, b = as_real(p.a, "a"), as_real(p.b, "b")
    require(a > 0, "a > 0")
    require(b > 0, "Re(b) > 0 (printed: Im(b) < 0, taken as the real limit)")
    for bad in (math.exp(a), math.exp(-a)):
        require(abs(b - bad) > 1e-9, "b != e^{+-a} (distinct poles)")


def _p3_rhs(p):
    m, s = float(p.m.real), float(p.s.real)
    a, b = float(p.a.real), complex(p.b)
    zm, zs = _rational_exp(m, "m"), _rational_exp(s, "s")

    def B1(t):
        return (I * a + PI - I * clog(t)) / TWO_PI

    def B2(t):
        return -I * (a + I * PI + clog(t)) / TWO_PI

    def pair(ze, t):
        return _phi(ze, 1.0, B1(t)) - _phi(ze, 1.0, B2(t))

    em, es = neg_pow(m), neg_pow(s)
    return (-em * cpow(-b, m) * pair(zm, -b)
            + em * cpow(b, m) * pair(zm, b)
            + es * cpow(-b, s) * pair(zs, -b)
            - es * cpow(b, s) * pair(zs, b)) / (4 * a * b)


def _p3_lhs(p):
    m, s = float(p.m.real), float(p.s.real)
    a, b = float(p.a.real), float(p.b.real)

    def f(x):
        L = plog(x)
        return (ppow(x, m) - ppow(x, s)) / ((-b * b + x * x) * (a * a - L * L))

    return spec(f, [sp(math.exp(-a), "simple-pole"), sp(b, "simple-pole"),
                    sp(math.exp(a), "simple-pole")])


P3 = IdentityEntry(
    id="P3",
    statement=("int_0^inf (x^m - x^s)/((x^2-b^2)(a^2-log^2 x)) dx: eight "
               "Phi(.,1,.) values at arguments (i a + pi -+ i log(+-b))/"
               "(2 pi), divided by 4 a b"),
    klass="pv",
    active=("m", "s", "a", "b"),
    defaults={"m": 0.5, "s": 0.25, "a": 1.0, "b": 2.0},
    validate=_p3_validate,
    rhs=_p3_rhs,
    lhs=_p3_lhs,
    notes="the printed display shows the 1/(4 a b) factor on the first group"
          " only; it divides all four (verified numerically)",
)


# ---------------------------------------------------------------- P4
def _p4_validate(p):
    _p1_validate(p)
    require(as_int(p.n, "n") >= 1, "n >= 1")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")
    require(p.gamma != p.b, "gamma != b")


def _p4_rhs(p):
    m, s = float(p.m.real), float(p.s.real)
    k, a = int(p.k), float(p.a.real)
    b, g, n = complex(p.b), complex(p.gamma), int(p.n)
    zm, zs = _rational_exp(m, "m"), _rational_exp(s, "s")
    la = math.log(a)

    def A(t):
        return phase_arg(la, t)

    em, es = neg_pow(m), neg_pow(s)
    first = -(2.0 ** k * (I * PI) ** (1 + k) / b) * (
        (b + g) ** (-n) * (em * cpow(-b, m) * _phi(zm, -k, A(-b))
                           - es * cpow(-b, s) * _phi(zs, -k, A(-b)))
        + (g - b) ** (-n) * (-em * cpow(b, m) * _phi(zm, -k, A(b))
                             + es * cpow(b, s) * _phi(zs, -k, A(b))))
    total = first
    cm, cs = {}, {}

    def phim(o):
        if o not in cm:
            cm[o] = _phi(zm, o, A(g))
        return cm[o]

    def phis(o):
        if o not in cs:
            cs[o] = _phi(zs, o, A(g))
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
                    total += ((-1) ** (1 + j - l) * 2.0 ** (k - h)
                              * (1 + m) ** (-h - l) * (I * PI) ** (1 - h + k)
                              * (1 + s) ** (-h - l)
                              * (g - b) ** (-n) * (b + g) ** (-n)
                              / (b * math.factorial(j))
                              * (-(1 - b / g) ** j * (b + g) ** n
                                 + (g - b) ** n * ((b + g) / g) ** j)
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              * (-em * (1 + m) ** pp * (1 + s) ** (h + l)
                                 * cpow(g, m) * phim(h - k)
                                 + es * (1 + m) ** (h + l) * (1 + s) ** pp
                                 * cpow(g, s) * phis(h - k))
                              * poch * S)
    return total


def _p4_lhs(p):
    m, s = float(p.m.real), float(p.s.real)
    k, a = int(p.k), float(p.a.real)
    b, g, n = float(p.b.real), complex(p.gamma), int(p.n)

    def f(x):
        return ((ppow(x, m) - ppow(x, s)) * (x + g) ** (-n)
                * plog(a * x) ** k / (b * b - x * x))

    return spec(f, [sp(b, "simple-pole")])


P4 = IdentityEntry(
    id="P4",
    statement=("int_0^inf (x^m - x^s)(x+g)^(-n) log^k(a x)/(b^2-x^2) dx: "
               "boundary Phi brackets at +-b plus the gamma quadruple sum "
               "with (-(1-b/g)^j (b+g)^n + (g-b)^n ((b+g)/g)^j)"),
    klass="pv",
    active=("m", "s", "k", "n", "a", "b", "gamma"),
    defaults={"m": 0.5, "s": 0.25, "k": 1, "n": 1, "a": 1.0, "b": 1.5,
              "gamma": 2.0},
    validate=_p4_validate,
    rhs=_p4_rhs,
    lhs=_p4_lhs,
)


# ---------------------------------------------------------------- P5
def _p5_validate(p):
    b, g = as_real(p.b, "b"), as_real(p.gamma, "gamma")
    require(b > 0 and g > 0, "b, gamma > 0 (Im(b) <= 0 limit)")
    require(b != g, "b != gamma")
    require(b != 1.0 and g != 1.0, "b, gamma != 1")


def _p5_rhs(p):
    b, g = complex(p.b), complex(p.gamma)
    lb, lmb, lgm = clog(b), clog(-b), clog(g)
    l4p = math.log(4.0) + math.log(PI)
    sqb, sqmb, sqg = csqrt(b), csqrt(-b), csqrt(g)
    b32 = b * sqb
    c0 = 0.5 * (-math.log(2.0) - math.log(PI))

    def lgpair(t_log, denom):
        up = (PI - I * t_log) / (4 * PI)
        return ((c0 + clog(-1 + up) + _lg(-1 + up))
                - (c0 + clog(-0.25 - I * t_log / (4 * PI))
                   + _lg(-0.25 - I * t_log / (4 * PI)))) / denom

    total = 0j
    total += (-0.25 + I * lb / (4 * PI)) * (
        -I * (1 + b) * PI ** 2 / (2 * b32 * (b - g))
        - (1 + b) * PI * l4p / (b32 * (b - g)))
    total += (0.5 - (PI - I * lb) / (4 * PI)) * (
        I * (1 + b) * PI ** 2 / (2 * b32 * (b - g))
        + (1 + b) * PI * l4p / (b32 * (b - g)))
    total += (0.5 - (PI - I * lmb) / (4 * PI)) * (
        -I * (-1 + b) * PI ** 2 / (2 * sqmb * b * (b + g))
        + (1 - b) * PI * l4p / (sqmb * b * (b + g)))
    total += (-0.25 + I * lmb / (4 * PI)) * (
        I * (-1 + b) * PI ** 2 / (2 * sqmb * b * (b + g))
        + (-1 + b) * PI * l4p / (sqmb * b * (b + g)))
    total += (-I * PI ** 2 * (1 + g) / ((b - g) * sqg * (b + g))
              - 2 * PI * (1 + g) * l4p / ((b - g) * sqg * (b + g))) \
        * (0.5 - (PI - I * lgm) / (4 * PI))
    total += (I * PI ** 2 * (1 + g) / ((b - g) * sqg * (b + g))
              + 2 * PI * (1 + g) * l4p / ((b - g) * sqg * (b + g))) \
        * (-0.25 + I * lgm / (4 * PI))
    total += (-1 + b) * PI * (c0 + clog(-1 + (PI - I * lmb) / (4 * PI))
                              + _lg(-1 + (PI - I * lmb) / (4 * PI))) \
        / (sqmb * b * (b + g))
    total += (1 - b) * PI * (c0 + clog(-0.25 - I * lmb / (4 * PI))
                             + _lg(-0.25 - I * lmb / (4 * PI))) \
        / (sqmb * b * (b + g))
    total += -(1 + b) * PI * (c0 + clog(-1 + (PI - I * lb) / (4 * PI))
                              + _lg(-1 + (PI - I * lb) / (4 * PI))) \
        / (b32 * (b - g))
    total += (1 + b) * PI * (c0 + clog(-0.25 - I * lb / (4 * PI))
                             + _lg(-0.25 - I * lb / (4 * PI))) \
        / (b32 * (b - g))
    total += 2 * PI * (1 + g) * (c0 + clog(-1 + (PI - I * lgm) / (4 * PI))
                                 + _lg(-1 + (PI - I * lgm) / (4 * PI))) \
        / ((b - g) * sqg * (b + g))
    total += -2 * PI * (1 + g) * (c0 + clog(-0.25 - I * lgm / (4 * PI))
                                  + _lg(-0.25 - I * lgm / (4 * PI))) \
        / ((b - g) * sqg * (b + g))
    return total


def _p5_lhs(p):
    b, g = float(p.b.real), complex(p.gamma)

    def f(x):
        return (1 - x) * loglog(x) / (psqrt(x) * (x * x - b * b) * (x + g))

    return spec(f, [sp(b, "simple-pole"), sp(1.0, "branch-point")])


P5 = IdentityEntry(
    id="P5",
    statement=("int_0^inf (1-x) log(log x)/(sqrt(x)(x^2-b^2)(x+g)) dx: "
               "twelve-term lnGamma combination at arguments "
               "(pi - i log(+-b, g))/(4 pi) shifts"),
    klass="pv",
    active=("b", "gamma"),
    defaults={"b": 2.0, "gamma": 3.0},
    validate=_p5_validate,
    rhs=_p5_rhs,
    lhs=_p5_lhs,
)


# ---------------------------------------------------------------- P6
def _p6_rhs(p):
    return PI / 4 * ((-1 + I) * PI + (4 + 4 * I) * math.log(2.0)
                     + 2 * clog(PI * _gamma(-0.25) ** 2
                                / (9 * _gamma(-0.75) ** 2)))


def _p6_lhs(p):
    def f(x):
        return loglog(x) / (psqrt(x) * (1 - x * x))

    return spec(f, [sp(1.0, "simple-pole"), sp(1.0, "branch-point")])


P6 = IdentityEntry(
    id="P6",
    statement=("int_0^inf log(log x)/(sqrt(x)(1-x^2)) dx = (pi/4)((i-1) pi "
               "+ (4+4i) log 2 + 2 log(pi Gamma(-1/4)^2/(9 Gamma(-3/4)^2)))"),
    klass="pv",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_p6_rhs,
    lhs=_p6_lhs,
)


# ---------------------------------------------------------------- P7
def _p7_validate(p):
    b, g = as_real(p.b, "b"), as_real(p.gamma, "gamma")
    require(b > 0 and g > 0 and b != g, "b, gamma > 0, b != gamma "
                                        "(Im(b) <= 0 limit)")
    require(b != 1.0, "b != 1")


def _q8(t):
    # Gamma-ratio log pair at eighth-shifted arguments
    l = clog(t)
    first = clog(_gamma((PI - I * l) / (8 * PI))
                 / (2 * _gamma(5 / 8 - I * l / (8 * PI))))
    second = clog(_gamma(3 / 8 - I * l / (8 * PI))
                  / (2 * _gamma(7 / 8 - I * l / (8 * PI))))
    return first, second


def _p7_rhs(p):
    b, g = complex(p.b), complex(p.gamma)
    qb, qmb, qg = cpow(b, 0.25), cpow(-b, 0.25), cpow(g, 0.25)
    sb, smb, sg = csqrt(b), csqrt(-b), csqrt(g)
    f_mb1, f_mb2 = _q8(-b)
    f_b1, f_b2 = _q8(b)
    f_g1, f_g2 = _q8(g)
    pref = (0.25 + 0.25 * I) * neg_pow(0.25) * PI / (
        qmb * cpow(b, 1.25) * (b - g) * qg * (b + g))
    inner = PI * qg * ((1 + smb) * qb * (b - g) + (1 + sb) * qmb * (b + g))
    inner += 4 * I * qmb * cpow(b, 1.25) * (1 + sg) * math.log(2.0)
    inner += 4 * I * qmb * cpow(b, 1.25) * (1 + sg) * clog(I * PI)
    inner += -2 * I * qg * ((1 + smb) * qb * (b - g)
                            + (1 + sb) * qmb * (b + g)) * math.log(2 * PI)
    inner += (2 + 2 * I) * qg * (
        qb * (b - g) * ((I + smb) * f_mb1 + (1 + I * smb) * f_mb2)
        + qmb * (b + g) * ((I + sb) * f_b1 + (1 + I * sb) * f_b2))
    inner += ((4 + 4 * I) * cpow(b, 2.25)
              * ((I + sg) * f_g1 + (1 + I * sg) * f_g2)) / cpow(-b, 0.75)
    return pref * inner


def _p7_lhs(p):
    b, g = float(p.b.real), complex(p.gamma)

    def f(x):
        return ((-1 + psqrt(x)) * loglog(x)
                / (ppow(x, 0.25) * (b * b - x * x) * (x + g)))

    return spec(f, [sp(b, "simple-pole"), sp(1.0, "branch-point")])


P7 = IdentityEntry(
    id="P7",
    statement=("int_0^inf (sqrt(x)-1) log(log x)/(x^(1/4)(b^2-x^2)(x+g)) "
               "dx: Gamma-ratio logs at (pi - i log t)/(8 pi) shifts, "
               "prefactor (1+i)/4 (-1)^(1/4) pi / ((-b)^(1/4) b^(5/4) "
               "(b-g) g^(1/4) (b+g))"),
    klass="pv",
    active=("b", "gamma"),
    defaults={"b": 2.0, "gamma": 3.0},
    validate=_p7_validate,
    rhs=_p7_rhs,
    lhs=_p7_lhs,
)


# ---------------------------------------------------------------- P8
def _p8_rhs(p):
    r2 = math.sqrt(2.0)
    return PI / 8 * (
        -2 * I + (-1 + 2 * I * r2) * PI - 4 * math.log(PI)
        + clog(cpow(64.0, (-2 + I) + 2 * r2) * _gamma(0.25) ** 8
               / _gamma(0.75) ** 8)
        + 4 * r2 * clog(PI * _gamma(5 / 8) * _gamma(7 / 8)
                        / (_gamma(1 / 8) * _gamma(3 / 8))))


def _p8_lhs(p):
    def f(x):
        return loglog(x) / ((1 + psqrt(x)) * ppow(x, 0.25) * (1 - x * x))

    return spec(f, [sp(1.0, "simple-pole"), sp(1.0, "branch-point")])


P8 = IdentityEntry(
    id="P8",
    statement=("int_0^inf log(log x)/((1+sqrt x) x^(1/4)(1-x^2)) dx = "
               "(pi/8)(-2i + (2 i sqrt2 - 1) pi - 4 log pi + log(64^((i-2)"
               "+2 sqrt2) Gamma(1/4)^8/Gamma(3/4)^8) + 4 sqrt2 log(pi "
               "Gamma(5/8) Gamma(7/8)/(Gamma(1/8) Gamma(3/8))))"),
    klass="pv",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_p8_rhs,
    lhs=_p8_lhs,
)


# ---------------------------------------------------------------- P9
def _p9_rhs(p):
    return 0.5 * (-math.log(2.0)
                  + PI * clog(-(1 + I) * csqrt(2.0 / PI) * _gamma(0.25)
                              / _gamma(-0.25)))


def _p9_lhs(p):
    def f(x):
        return psqrt(x) * loglog(x) / ((x - 1) ** 2 * (1 + x))

    return spec(f, [sp(1.0, "double-pole"), sp(1.0, "branch-point")])


P9 = IdentityEntry(
    id="P9",
    statement=("int_0^inf sqrt(x) log(log x)/((x-1)^2 (1+x)) dx = (1/2)"
               "(-log 2 + pi log(-(1+i) sqrt(2/pi) Gamma(1/4)/Gamma(-1/4)))"),
    klass="finite-part",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_p9_rhs,
    lhs=_p9_lhs,
    orientation="lower",
    notes="printed value is the mirrored (lower-arc) regularization: the "
          "upper-arc value is its conjugate",
)


# ---------------------------------------------------------------- P10
def _p10_rhs(p):
    return (-8 * math.log(2.0)
            + PI * (I - (1 + 2 * I) * PI - 4 * math.log(PI)
                    + 8 * clog(-2 * _gamma(0.25) / _gamma(-0.25)))) / 32.0


def _p10_lhs(p):
    def f(x):
        return (psqrt(x) - x) * loglog(x) / ((x - 1) ** 2 * (1 - x * x))

    return spec(f, [sp(1.0, "double-pole"), sp(1.0, "branch-point")])


P10 = IdentityEntry(
    id="P10",
    statement=("int_0^inf (sqrt(x)-x) log(log x)/((x-1)^2 (1-x^2)) dx = "
               "(1/32)(-8 log2 + pi (i - (1+2i) pi - 4 log pi + "
               "8 log(-2 Gamma(1/4)/Gamma(-1/4))))"),
    klass="finite-part",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_p10_rhs,
    lhs=_p10_lhs,
)


# ---------------------------------------------------------------- P11
def _p11_validate(p):
    b, g = as_real(p.b, "b"), as_real(p.gamma, "gamma")
    require(b > 0 and g > 0 and b != g,
            "Re(b) >= 0, Im(b) <= 0, Im(gamma) >= 0 limits; b != gamma")
    require(b != 1.0, "b != 1")


def _p11_rhs(p):
    b, g = complex(p.b), complex(p.gamma)
    lb, lmb, lg_ = clog(b), clog(-b), clog(g)
    sb, smb, sg = csqrt(b), csqrt(-b), csqrt(g)
    qg = cpow(g, 0.25)
    q1 = neg_pow(0.25)
    r2 = math.sqrt(2.0)
    l2pi = clog(2 * PI)
    l4pi = clog(4 * PI)
    l32p3 = clog(32 * PI ** 3)
    f_mb1, f_mb2 = _q8(-b)
    f_b1, f_b2 = _q8(b)
    f_g1, f_g2 = _q8(g)
    t = 0j
    t += -4 * r2 * b ** 2 * PI * qg * (I * PI / 2 + l2pi)
    t += -2 * r2 * cpow(-b, 0.75) * PI * (b - g) * sg * (I * PI / 2 + l2pi)
    t += smb * (b - g) * sg * (PI - I * lmb) * (I * PI / 2 + l4pi)
    t += smb * (b - g) * sg * (PI + I * lmb) * (I * PI / 2 + l4pi)
    t += -sb * sg * (b + g) * (PI - I * lb) * (I * PI / 2 + l4pi)
    t += -sb * sg * (b + g) * (PI + I * lb) * (I * PI / 2 + l4pi)
    t += r2 * cpow(b, 0.75) * PI * sg * (b + g) * (I * PI + clog(4 * PI ** 2))
    t += b ** 2 * (I * PI + 2 * l4pi) * (PI - I * lg_)
    t += b ** 2 * (I * PI + 2 * l4pi) * (PI + I * lg_)
    t += 4 * q1 * cpow(-b, 0.75) * PI * (b - g) * sg * (f_mb1 - I * f_mb2)
    t += -4 * q1 * cpow(b, 0.75) * PI * sg * (b + g) * (f_b1 - I * f_b2)
    t += 8 * q1 * b ** 2 * PI * qg * (f_g1 - I * f_g2)
    t += -2 * smb * PI * (b - g) * sg * (
        l32p3 - 2 * clog(-PI - I * lmb) - 2 * _lg(-(PI + I * lmb) / (4 * PI)))
    t += 2 * smb * PI * (b - g) * sg * (
        l32p3 - 2 * clog(-3 * PI - I * lmb) - 2 * _lg(-0.75 - I * lmb / (4 * PI)))
    t += 2 * sb * PI * sg * (b + g) * (
        l32p3 - 2 * clog(-PI - I * lb) - 2 * _lg(-(PI + I * lb) / (4 * PI)))
    t += -2 * sb * PI * sg * (b + g) * (
        l32p3 - 2 * clog(-3 * PI - I * lb) - 2 * _lg(-0.75 - I * lb / (4 * PI)))
    t += -4 * b ** 2 * PI * (
        l32p3 - 2 * clog(-PI - I * lg_) - 2 * _lg(-(PI + I * lg_) / (4 * PI)))
    t += 4 * b ** 2 * PI * (
        l32p3 - 2 * clog(-3 * PI - I * lg_) - 2 * _lg(-0.75 - I * lg_ / (4 * PI)))
    return t / (4 * b ** 2 * (b - g) * sg * (b + g))


def _p11_lhs(p):
    b, g = float(p.b.real), complex(p.gamma)

    def f(x):
        return ((-1 + ppow(x, 0.25)) * loglog(x)
                / (psqrt(x) * (x * x - b * b) * (x + g)))

    return spec(f, [sp(b, "simple-pole"), sp(1.0, "branch-point")])


P11 = IdentityEntry(
    id="P11",
    statement=("int_0^inf (x^(1/4)-1) log(log x)/(sqrt(x)(x^2-b^2)(x+g)) "
               "dx: twenty-term pi/log/lnGamma combination over "
               "(4 b^2 (b-g) sqrt(g) (b+g))"),
    klass="pv",
    active=("b", "gamma"),
    defaults={"b": 2.0, "gamma": 3.0},
    validate=_p11_validate,
    rhs=_p11_rhs,
    lhs=_p11_lhs,
)


# ---------------------------------------------------------------- P12
def _p12_rhs(p):
    r2 = math.sqrt(2.0)
    g18, g38 = _gamma(1 / 8), _gamma(3 / 8)
    g58, g78 = _gamma(5 / 8), _gamma(7 / 8)
    big = clog(81.0 * cpow(g58 / g18, 4 * neg_pow(0.25))
               * cpow(g38 / g78, 4 * neg_pow(0.75)))
    return (((1 - 5 * I) + 2 * I * r2) * PI ** 2 + math.log(16.0)
            + 2 * PI * (-I - (13 - I) * math.log(2.0) + r2 * math.log(64.0)
                        + (-5 + 2 * r2) * math.log(PI)
                        + 6 * clog(_gamma(0.25)) - 6 * clog(_gamma(0.75))
                        + big + 4 * _lg(-0.75) - 4 * _lg(-0.25))) / 16.0


def _p12_lhs(p):
    def f(x):
        return ((-1 + ppow(x, 0.25)) * loglog(x)
                / ((x - 1) ** 2 * psqrt(x) * (1 + x)))

    return spec(f, [sp(1.0, "double-pole"), sp(1.0, "branch-point")])


P12 = IdentityEntry(
    id="P12",
    statement=("int_0^inf (x^(1/4)-1) log(log x)/((x-1)^2 sqrt(x)(1+x)) dx:"
               " pi^2, log and lnGamma combination including 81 (Gamma(5/8)"
               "/Gamma(1/8))^(4 (-1)^(1/4)) (Gamma(3/8)/Gamma(7/8))"
               "^(4 (-1)^(3/4)), all over 16"),
    klass="finite-part",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_p12_rhs,
    lhs=_p12_lhs,
)

ENTRIES = [P1, P2, P3, P4, P5, P6, P7, P8, P9, P10, P11, P12]
