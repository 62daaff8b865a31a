"""Shared machinery for catalog entries: entry type, scalar branch helpers,
and the reusable closed-form sum structures (the main two-part form and the
power-weight variant it degenerates to without the 1/(b+x) factor).
"""

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .. import specfun as sf
from ..branching import PI, plog, ppow, psqrt, loglog
from ..quad import IntegrandSpec, SingularPoint
from .params import IdentityParameters

I = 1j
TWO_PI = 2.0 * PI


# scalar wrappers around the vectorized branch helpers
def clog(z):
    return complex(plog(z))


def cpow(z, w):
    return complex(ppow(z, w))


def csqrt(z):
    return complex(psqrt(z))


def cloglog(z):
    return complex(loglog(z))


def neg_pow(w):
    """(-1)^w under the upper-edge convention, i.e. e^{i pi w}."""
    return cmath.exp(I * PI * complex(w))


@dataclass(frozen=True)
class IdentityEntry:
    """One verified identity: statement, validators, both sides, routing."""

    id: str
    statement: str
    klass: str                      # regular | complex-branch | pv | finite-part
    active: tuple
    defaults: dict
    validate: Callable[[IdentityParameters], None]
    rhs: Callable[[IdentityParameters], complex]
    lhs: Callable[[IdentityParameters], IntegrandSpec]
    orientation: str = "upper"      # pole-deformation side; P9 is the lone "lower"
    notes: str = ""

    @property
    def experimental(self):
        return self.klass == "finite-part"

    def params(self, overrides=None):
        vals = dict(self.defaults)
        if overrides:
            vals.update(overrides)
        return IdentityParameters.from_mapping(vals)


def phase_arg(shift, t):
    """The recurring Phi argument -i(i pi + shift + log t)/(2 pi).

    shift is log(a) for log^k(ax) entries, the additive a for a + log(x)
    entries, and i pi for log(-x) entries; Re of the result is >= 1/2 - ish,
    inside the Phi domain for every catalog point.
    """
    return -I * (I * PI + shift + clog(t)) / TWO_PI


def phi_for(mu, s, a):
    """Phi(e^{2 i pi mu}, s, a): series route strictly inside the unit disk
    (Im mu > 0), root-of-unity decomposition for real rational mu."""
    mu = complex(mu)
    if mu.imag > 0.0:
        z = cmath.exp(2j * PI * mu)
        return sf.lerch_phi_series(z, s, a)
    if mu.imag < 0.0:
        raise sf.DomainError("Im(exponent) < 0 puts z outside the unit disk")
    return sf.lerch_phi(sf.RationalExponent.from_value(mu.real), s, a)


def theorem_sum(m, k, shift, b, g, n, phi=phi_for, stirling=None):
    """The two-part closed form behind the general log-power integral
    int_0^inf x^{m-1} log^k(a x) / ((b+x)(x+gamma)^n) dx.

    b-term + quadruple sum over j <= n-1, p <= j, l <= p, h <= p-l with
    signed first-kind Stirling numbers and Phi orders h-k; m may sit inside
    the open strip (series route) or be real rational (decomposition).
    stirling overrides the S_j^(p) interpretation (used by the gate test
    that pins the signed first-kind reading).
    """
    stirling = stirling or sf.stirling_first
    k = int(k)
    n = int(n)
    A_b = phase_arg(shift, b)
    A_g = phase_arg(shift, g)
    em = neg_pow(m)  # (-1)^m
    total = cpow(b, m - 1) * (-em) * (2j * PI) ** (k + 1) * (g - b) ** (-n) \
        * phi(m, -k, A_b)
    cache = {}

    def phi_g(order):
        if order not in cache:
            cache[order] = phi(m, order, A_g)
        return cache[order]

    gb = (g - b) / g
    for j in range(n):
        for p in range(j + 1):
            S = stirling(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = sf.pochhammer(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += ((-1) ** (j - l) * em * complex(m) ** (p - l - h)
                              * (2j * PI) ** (1 - h + k) * cpow(g, m - 1)
                              * (g - b) ** (-n) * gb ** j
                              * math.comb(p, l) * math.comb(p - l, h)
                              / math.factorial(j)
                              * poch * phi_g(h - k) * S)
    return total


def power_weight_sum(m, shift, g, n, k, zeta_like):
    """The no-b variant for int_0^inf x^m (x+gamma)^{-n} log^k(a x) dx.

    zeta_like(order, arg) supplies Phi(e^{2 i pi m}, order, arg) for the
    fractional-power entries and the Hurwitz zeta itself when m is an
    integer (z = 1).  The coefficient base is 2 + m with the printed
    (-1)^{2+j-l+m} sign.
    """
    k = int(k)
    n = int(n)
    A_g = phase_arg(shift, g)
    em = neg_pow(m)
    cache = {}

    def zl(order):
        if order not in cache:
            cache[order] = zeta_like(order, A_g)
        return cache[order]

    total = 0j
    for j in range(n):
        for p in range(j + 1):
            S = sf.stirling_first(j, p)
            if S == 0:
                continue
            for l in range(p + 1):
                for h in range(p - l + 1):
                    poch = sf.pochhammer(1 - h + k, h)
                    if poch == 0:
                        continue
                    total += ((-1) ** (j - l) * em
                              * complex(2 + m) ** (p - h - l)
                              * (2j * PI) ** (1 - h + k)
                              * cpow(g, 1 + m - n)
                              * math.comb(p, l) * math.comb(p - l, h)
                              / math.factorial(j)
                              * zl(h - k) * poch * S)
    return total


def spec(f, sing=(), domain=(0.0, math.inf), offsets=None, note=""):
    return IntegrandSpec(evaluator=f, singular_points=tuple(sing),
                         domain=domain, offset_evals=offsets or {},
                         branch_note=note)


def sp(location, kind):
    return SingularPoint(float(location), kind)
