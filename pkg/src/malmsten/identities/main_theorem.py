"""THM and GR2: the general closed form and the corrected table entry."""

import cmath
import math

from .. import specfun as sf
from ..branching import PI, plog, ppow
from .base import IdentityEntry, clog, spec, theorem_sum
from .params import require, as_int, as_real

I = 1j


def _thm_validate(p):
    m = complex(p.m)
    if m.imag == 0.0:
        # real-m limit mode: z on the unit circle via the rational decomposition
        require(0.0 < m.real < 1.0, "0 < Re(m) < 1")
        sf.RationalExponent.from_value(m.real)
    else:
        require(0.0 < m.real < 1.0 and 0.0 < m.imag < 1.0,
                "0 < Re(m) < 1, 0 < Im(m) < 1")
    k = as_int(p.k, "k")
    require(k >= 0, "k >= 0")
    n = as_int(p.n, "n")
    require(n >= 1, "n >= 1")
    require(as_real(p.a, "a") > 0, "a > 0")
    require(as_real(p.b, "b") > 0, "Re(b) > 0")
    require(as_real(p.gamma, "gamma") > 0, "Re(gamma) > 0")
    require(p.b != p.gamma, "b != gamma")


def _thm_rhs(p):
    return theorem_sum(complex(p.m), int(p.k), clog(p.a), complex(p.b),
                       complex(p.gamma), int(p.n))


def _thm_lhs(p):
    m, k, n = complex(p.m), int(p.k), int(p.n)
    a, b, g = float(p.a.real), complex(p.b), complex(p.gamma)

    def f(x):
        return ppow(x, m - 1) * plog(a * x) ** k / ((b + x) * (x + g) ** n)

    return spec(f, note="principal log; oscillatory x^{i Im m} endpoints")


THM = IdentityEntry(
    id="THM",
    statement=("int_0^inf x^(m-1) log^k(a x) / ((b+x)(x+g)^n) dx = "
               "b^(m-1)(-1)^(m+1)(2 i pi)^(k+1)(g-b)^(-n) "
               "Phi(e^(2 i m pi), -k, (pi - i log(a b))/(2 pi)) + "
               "sum_(j<n) sum_(p<=j) sum_(l<=p) sum_(h<=p-l) "
               "(-1)^(j-l)(-1)^m m^(p-l-h)(2 i pi)^(1-h+k) g^(m-1)(g-b)^(-n) "
               "((g-b)/g)^j C(p,l) C(p-l,h)(1-h+k)_h "
               "Phi(e^(2 i m pi), h-k, (pi - i log(a g))/(2 pi)) S_j^(p) / j!"
               " for 0 < Re(m) < 1, 0 < Im(m) < 1 (real rational m via the "
               "decomposition limit mode)"),
    klass="regular",
    active=("m", "k", "n", "a", "b", "gamma"),
    defaults={"m": 0.4 + 0.3j, "k": 1, "n": 2, "a": 1.0, "b": 1.0,
              "gamma": 2.0},
    validate=_thm_validate,
    rhs=_thm_rhs,
    lhs=_thm_lhs,
    notes=("strip-interior m uses the convergent series for Phi; real "
           "rational m uses the root-of-unity decomposition (limit mode)"),
)


def _gr2_validate(p):
    v, n = complex(p.v), as_int(p.n, "n")
    require(n >= 1, "n >= 1")
    require(0.0 < v.real < n, "0 < Re(v) < n")
    for name, t in (("b", complex(p.b)), ("gamma", complex(p.gamma))):
        require(t != 0 and not (t.real < 0 and t.imag == 0),
                f"|arg {name}| < pi")
    if p.b == p.gamma:
        raise sf.DomainError("degenerate at b = gamma (use the b->gamma limit)")


def _gr2_rhs(p):
    v, n, b, g = complex(p.v), int(p.n), complex(p.b), complex(p.gamma)
    ssum = sum(sf.pochhammer(1 - v, j) * ((g - b) / g) ** j / math.factorial(j)
               for j in range(n))
    return (PI * cpow_(b, v - 1) / (cmath.sin(PI * v) * (g - b) ** n)
            * (1.0 - cpow_(g / b, v - 1) * ssum))


def cpow_(z, w):
    return complex(ppow(z, w))


def _gr2_lhs(p):
    v, n, b, g = complex(p.v), int(p.n), complex(p.b), complex(p.gamma)

    def f(x):
        return ppow(x, v - 1) * (g + x) ** (-n) / (x + b)

    return spec(f)


GR2 = IdentityEntry(
    id="GR2",
    statement=("int_0^inf x^(v-1) (g+x)^(-n) / (x+b) dx = "
               "pi b^(v-1) csc(pi v) (g-b)^(-n) "
               "(1 - (g/b)^(v-1) sum_(j<n) (1-v)_j ((g-b)/g)^j / j!) "
               "for 0 < Re(v) < n, |arg b| < pi, |arg g| < pi"),
    klass="regular",
    active=("v", "n", "b", "gamma"),
    defaults={"v": 0.7, "n": 3, "b": 2.0, "gamma": 5.0},
    validate=_gr2_validate,
    rhs=_gr2_rhs,
    lhs=_gr2_lhs,
)
