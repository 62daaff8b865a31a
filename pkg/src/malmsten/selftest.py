"""Runtime self-test of the special-function invariants (no pytest needed).

Covers the shift/recurrence/bridge identities at their stated tolerances on
seeded grids; the CLI exposes it as `malmsten selftest`.
"""

import cmath
import math

import numpy as np

from . import specfun as sf
from .specfun import RationalExponent


def _grid_sa(rng, count, qs=None):
    out = []
    while len(out) < count:
        s = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        if abs(s - 1) < 0.1:
            continue
        a = float(rng.uniform(0.05, 3.0))
        if qs is None:
            out.append((s, a))
        else:
            q = int(rng.choice(qs))
            p = int(rng.integers(1, q))
            if math.gcd(p, q) != 1:
                continue
            out.append((s, a, p, q))
    return out


def run(verbose=False, seed=20260810):
    rng = np.random.default_rng(seed)
    checks = []

    def report(name, worst, tol):
        ok = worst <= tol
        checks.append((name, worst, tol, ok))
        if verbose:
            print(f"{'PASS' if ok else 'FAIL'} {name}: worst {worst:.2e} "
                  f"(tol {tol:.0e})")
        return ok

    worst = 0.0
    for s, a in _grid_sa(rng, 60):
        z1 = sf.hurwitz_zeta(s, a)
        d = abs(z1 - sf.hurwitz_zeta(s, a + 1) - cmath.exp(-s * cmath.log(a)))
        worst = max(worst, d / (1.0 + abs(z1)))
    report("hurwitz shift zeta(s,a)=zeta(s,a+1)+a^-s", worst, 1e-12)

    worst = 0.0
    for n in range(11):
        a = complex(rng.uniform(0.1, 2.5), rng.uniform(-1.5, 1.5))
        z = sf.hurwitz_zeta(float(-n), a)
        ref = -complex(sf.bernoulli_poly(n + 1, a)) / (n + 1)
        worst = max(worst, abs(z - ref) / max(abs(ref), 1e-12))
    report("negative-integer reduction to Bernoulli", worst, 1e-13)

    worst = 0.0
    for s, a, p, q in _grid_sa(rng, 40, qs=(2, 3, 4, 6, 8)):
        m = RationalExponent(p, q)
        z = m.phase()
        lhs = sf.lerch_phi(m, s, a)
        rhs = z * sf.lerch_phi(m, s, a + 1) + cmath.exp(-s * cmath.log(a))
        worst = max(worst, abs(lhs - rhs) / (1.0 + abs(lhs)))
    report("lerch shift Phi(z,s,a)=z Phi(z,s,a+1)+a^-s", worst, 1e-12)

    worst = 0.0
    for n in (1, 2, 3):
        for _ in range(8):
            z = complex(rng.uniform(0.2, 4.0), rng.uniform(-2.0, 2.0))
            lhs = sf.polygamma(n, z)
            rhs = (-1) ** (n + 1) * math.factorial(n) * sf.hurwitz_zeta(n + 1.0, z)
            worst = max(worst, abs(lhs - rhs) / (1.0 + abs(lhs)))
    report("polygamma/zeta bridge", worst, 1e-12)

    worst = 0
    for j in range(9):
        for x in range(9):
            acc = sum(sf.stirling_first(j, p) * x ** p for p in range(j + 1))
            ff = 1
            for i in range(j):
                ff *= (x - i)
            worst = max(worst, abs(acc - ff))
    report("stirling falling-factorial identity (exact)", worst, 0)

    worst = 0.0
    for _ in range(25):
        z = complex(rng.uniform(0.2, 5.0), rng.uniform(-3.0, 3.0))
        g1 = cmath.exp(sf.log_gamma(z + 1))
        g0 = cmath.exp(sf.log_gamma(z))
        worst = max(worst, abs(g1 - z * g0) / abs(g1))
    report("gamma recurrence via exp(log_gamma)", worst, 1e-12)

    c = sf.constants()
    d0 = abs(sf.zeta_derivative(0.0) - (-0.5 * math.log(2 * math.pi)))
    report("zeta'(0) = -log(2 pi)/2", d0, 1e-10)
    d1 = abs(sf.zeta_derivative(-1.0) - (1.0 / 12.0 - c.log_glaisher))
    report("zeta'(-1) = 1/12 - log A", d1, 1e-10)

    failed = [c for c in checks if not c[3]]
    if verbose:
        print(f"-- {len(checks) - len(failed)}/{len(checks)} invariant "
              f"checks passed")
    return 0 if not failed else 1
