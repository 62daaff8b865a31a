"""Catalog entries K1-K6: power-weighted log integrals without the 1/(b+x)
factor, plus two closed-form Glaisher/polylog evaluations."""

import math

import numpy as np

from .. import specfun as sf
from ..branching import PI, plog, ppow, psqrt, loglog
from .base import (IdentityEntry, clog, cpow, neg_pow, phase_arg,
                   power_weight_sum, spec, sp)
from .params import require, as_int, as_real

I = 1j


def _rational_exp(x, name):
    try:
        return sf.RationalExponent.from_value(complex(x).real)
    except sf.DomainError as exc:
        raise sf.DomainError(f"{name}: {exc}") from exc


def _phi_like(m):
    zm = _rational_exp(m, "m")

    def zl(order, arg):
        return sf.lerch_phi(zm, float(order), arg)

    return zl


# ---------------------------------------------------------------- K1
def _k1_validate(p):
    m = as_real(p.m, "m")
    require(-1 < m < 0, "-1 < m < 0")
    _rational_exp(m, "m")
    require(as_int(p.n, "n") >= 1, "n >= 1")
    require(as_int(p.k, "k") >= 0, "k >= 0")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")


def _k1_rhs(p):
    m = float(p.m.real)
    return power_weight_sum(m, 0.0, complex(p.gamma), int(p.n), int(p.k),
                            _phi_like(m))


def _k1_lhs(p):
    m, n, k, g = float(p.m.real), int(p.n), int(p.k), complex(p.gamma)

    def f(x):
        return ppow(x, m) * (x + g) ** (-n) * plog(x) ** k

    return spec(f)


K1 = IdentityEntry(
    id="K1",
    statement=("int_0^inf x^m (x+g)^(-n) log^k(x) dx = sum_(jplh) "
               "(-1)^(2+j-l+m) (2+m)^(p-h-l) (2 i pi)^(1-h+k) g^(1+m-n) "
               "C(p,l) C(p-l,h) Phi(e^(2 i m pi), h-k, (pi - i log g)/"
               "(2 pi)) (1-h+k)_h S_j^(p) / j!"),
    klass="regular",
    active=("m", "n", "k", "gamma"),
    defaults={"m": -0.5, "n": 2, "k": 1, "gamma": 2.0},
    validate=_k1_validate,
    rhs=_k1_rhs,
    lhs=_k1_lhs,
)


# ---------------------------------------------------------------- K2
def _k2_validate(p):
    m = as_real(p.m, "m")
    require(-1 < m < 0, "-1 < m < 0")
    _rational_exp(m, "m")
    require(as_int(p.n, "n") >= 1, "n >= 1")
    require(as_int(p.k, "k") >= 0, "k >= 0")
    g = complex(p.gamma)
    require(not (g.imag == 0.0 and g.real >= 0.0),
            "gamma off the positive real axis (no pole on the path)")


def _k2_rhs(p):
    m = float(p.m.real)
    return power_weight_sum(m, 0.0, -complex(p.gamma), int(p.n), int(p.k),
                            _phi_like(m))


def _k2_lhs(p):
    m, n, k, g = float(p.m.real), int(p.n), int(p.k), complex(p.gamma)

    def f(x):
        return ppow(x, m) * (x - g) ** (-n) * plog(x) ** k

    return spec(f)


K2 = IdentityEntry(
    id="K2",
    statement=("int_0^inf x^m (x-g)^(-n) log^k(x) dx = sum_(jplh) "
               "(-1)^(2+j-l+m) (2+m)^(p-h-l) (2 i pi)^(1-h+k) (-g)^(1+m-n)"
               " C(p,l) C(p-l,h) Phi(e^(2 i m pi), h-k, (pi - i log(-g))/"
               "(2 pi)) (1-h+k)_h S_j^(p) / j!"),
    klass="complex-branch",
    active=("m", "n", "k", "gamma"),
    defaults={"m": -0.5, "n": 2, "k": 1, "gamma": 2j},
    validate=_k2_validate,
    rhs=_k2_rhs,
    lhs=_k2_lhs,
    notes="the K1 form continued to gamma off the positive axis",
)


# ---------------------------------------------------------------- K3
def _k3_validate(p):
    m = as_real(p.m, "m")
    require(-1 < m < 0, "-1 < m < 0")
    _rational_exp(m, "m")
    n2 = as_real(p.n, "n") * 2
    require(n2 == round(n2) and round(n2) % 2 == 1 and p.n >= 1.5,
            "n = p + 1/2 for a natural p")
    require(as_int(p.k, "k") >= 0, "k >= 0")
    require(as_real(p.beta, "beta") > 0, "beta > 0")


def _k3_rhs(p):
    m = float(p.m.real)
    pnat = int(round(float(p.n) - 0.5))
    return power_weight_sum(m, 0.0, complex(p.beta), pnat, int(p.k),
                            _phi_like(m))


def _k3_lhs(p):
    m, k, b = float(p.m.real), int(p.k), complex(p.beta)
    nhalf = float(p.n)

    def f(x):
        return ppow(x, m) * ppow(x + b, 0.5 - nhalf) * plog(x) ** k

    return spec(f)


K3 = IdentityEntry(
    id="K3",
    statement=("int_0^inf x^m (x+beta)^(1/2-n) log^k(x) dx with n = p+1/2:"
               " sum_(j<=n-3/2) ... beta^(3/2+m-n) Phi(e^(2 i m pi), h-k, "
               "(pi - i log beta)/(2 pi)) ..."),
    klass="regular",
    active=("m", "n", "k", "beta"),
    defaults={"m": -0.5, "n": 2.5, "k": 1, "beta": 3.0},
    validate=_k3_validate,
    rhs=_k3_rhs,
    lhs=_k3_lhs,
)


# ---------------------------------------------------------------- K4
def _k4_validate(p):
    m, s = as_real(p.m, "m"), as_real(p.s, "s")
    require(-1 < m < 0 and -1 < s < 0, "-1 < m, s < 0")
    require(m != s, "m != s")
    _rational_exp(m, "m")
    _rational_exp(s, "s")
    require(as_int(p.n, "n") >= 1, "n >= 1")
    require(as_int(p.k, "k") >= 0, "k >= 0")
    require(as_real(p.a, "a") > 0, "a > 0")
    require(as_real(p.gamma, "gamma") > 0, "gamma > 0")


def _k4_rhs(p):
    m, s = float(p.m.real), float(p.s.real)
    k, n, a, g = int(p.k), int(p.n), float(p.a.real), complex(p.gamma)
    zm, zs = _rational_exp(m, "m"), _rational_exp(s, "s")
    A = phase_arg(math.log(a), g)
    em, es = neg_pow(m), neg_pow(s)
    cm, cs = {}, {}

    def phim(o):
        if o not in cm:
            cm[o] = sf.lerch_phi(zm, float(o), A)
        return cm[o]

    def phis(o):
        if o not in cs:
            cs[o] = sf.lerch_phi(zs, float(o), A)
        return cs[o]

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
                    total += (I * (-1) ** (j - l) * 1j ** (k - h)
                              * (2 + m) ** (-h - l) * (2 * PI) ** (1 - h + k)
                              * (2 + s) ** (-h - l) * cpow(g, 1 - n)
                              * math.comb(pp, l) * math.comb(pp - l, h)
                              / math.factorial(j)
                              * (-em * (2 + m) ** pp * (2 + s) ** (h + l)
                                 * cpow(g, m) * phim(h - k)
                                 + es * (2 + m) ** (h + l) * (2 + s) ** pp
                                 * cpow(g, s) * phis(h - k))
                              * poch * S)
    return total


def _k4_lhs(p):
    m, s = float(p.m.real), float(p.s.real)
    k, n, a, g = int(p.k), int(p.n), float(p.a.real), complex(p.gamma)

    def f(x):
        return (-ppow(x, m) + ppow(x, s)) * plog(a * x) ** k * (x + g) ** (-n)

    return spec(f)


K4 = IdentityEntry(
    id="K4",
    statement=("int_0^inf (x^s - x^m) log^k(a x)/(x+g)^n dx = sum_(jplh) "
               "i (-1)^(j-l) i^(k-h) (2+m)^(-h-l) (2 pi)^(1-h+k) "
               "(2+s)^(-h-l) g^(1-n) C(p,l) C(p-l,h) ((-1)^(1+m)(2+m)^p "
               "(2+s)^(h+l) g^m Phi_m(h-k, A) + (-1)^s (2+m)^(h+l) "
               "(2+s)^p g^s Phi_s(h-k, A)) (1-h+k)_h S_j^(p) / j!"),
    klass="regular",
    active=("m", "s", "n", "k", "a", "gamma"),
    defaults={"m": -0.5, "s": -0.25, "n": 1, "k": 1, "a": 1.0, "gamma": 2.0},
    validate=_k4_validate,
    rhs=_k4_rhs,
    lhs=_k4_lhs,
)


# ---------------------------------------------------------------- K5
def _k5_rhs(p):
    A12 = math.exp(12.0 * sf.constants().log_glaisher)
    return PI ** 2 * clog(A12 / (4 * 2.0 ** (1.0 / 3.0) * math.e * PI * I))


def _k5_lhs(p):
    def f(x):
        return plog(x) * loglog(x) / ((1 - x) * psqrt(x))

    def right(u):
        L = np.log1p(u)
        return L * np.log(L) / (-u * np.sqrt(1.0 + u))

    def left(u):
        L = -np.log1p(-u)
        return -L * (np.log(L) + I * PI) / (u * np.sqrt(1.0 - u))

    return spec(f, [sp(1.0, "removable"), sp(1.0, "branch-point")],
                offsets={(1.0, 1.0): right, (1.0, -1.0): left})


K5 = IdentityEntry(
    id="K5",
    statement=("int_0^inf log(x) log(log x)/((1-x) sqrt(x)) dx = "
               "pi^2 log(A^12/(4 2^(1/3) e pi i))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_k5_rhs,
    lhs=_k5_lhs,
    notes="x = 1 is removable: log x/(1-x) -> -1",
)


# ---------------------------------------------------------------- K6
def _k6_rhs(p):
    r2 = math.sqrt(2.0)
    z = sf.riemann_zeta(-0.5)
    li = sf.polylog(-0.5, -1.0)
    return ((1 + I) * PI ** 1.5
            * ((-1 + 2 * r2) * (PI - 2j * math.log(2 * PI)) * z + 2j * li))


def _k6_lhs(p):
    def f(x):
        return psqrt(plog(x)) * loglog(x) / ((1 - x) * psqrt(x))

    def right(u):
        L = np.log1p(u)
        return np.sqrt(L) * np.log(L) / (-u * np.sqrt(1.0 + u))

    def left(u):
        L = -np.log1p(-u)
        return 1j * np.sqrt(L) * (np.log(L) + I * PI) / (u * np.sqrt(1.0 - u))

    return spec(f, [sp(1.0, "algebraic"), sp(1.0, "branch-point")],
                offsets={(1.0, 1.0): right, (1.0, -1.0): left})


K6 = IdentityEntry(
    id="K6",
    statement=("int_0^inf sqrt(log x) log(log x)/((1-x) sqrt(x)) dx = "
               "(1+i) pi^(3/2) ((2 sqrt2 - 1)(pi - 2 i log(2 pi)) "
               "zeta(-1/2) + 2 i Li_(-1/2)(-1))"),
    klass="complex-branch",
    active=(),
    defaults={},
    validate=lambda p: None,
    rhs=_k6_rhs,
    lhs=_k6_lhs,
)

ENTRIES = [K1, K2, K3, K4, K5, K6]
