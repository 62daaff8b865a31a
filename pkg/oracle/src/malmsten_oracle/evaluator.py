"""Independent arbitrary-precision evaluation of fixture targets.

Everything here runs on mpmath's own algorithms (its zeta, lerchphi,
loggamma, stieltjes, numeric differentiation); nothing imports the primary
package.  Branch conventions match the shared contract: principal logs,
upper edge on the negative real axis, lnGamma continued with the limit from
above (mpmath's native choice).
"""

import mpmath as mp

I = mp.mpc(0, 1)


def _pi():
    return mp.pi


def cnum(text):
    """Parse '0.25', '-0.5', '1.5-0.2j' into an mpmath complex number."""
    t = str(text).strip().replace(" ", "").replace("I", "j")
    if t.endswith("j") or "j" in t:
        z = complex(t)  # split re/im lexically, then re-read at precision
        # re-parse the parts as decimal strings to avoid double rounding
        return mp.mpc(mp.mpf(repr(z.real)), mp.mpf(repr(z.imag)))
    return mp.mpc(mp.mpf(t), 0)


def lerch_unit(p, q, s, a):
    """Phi(e^{2 pi i p/q}, s, a) by the root-of-unity Hurwitz decomposition."""
    z1 = mp.exp(2j * mp.pi * mp.mpf(p) / q)
    if s == 1:
        acc = mp.mpc(0)
        for r in range(q):
            acc += z1 ** r * mp.digamma((a + r) / q)
        return -acc / q
    acc = mp.mpc(0)
    for r in range(q):
        acc += z1 ** r * mp.zeta(s, (a + r) / q)
    return mp.power(q, -s) * acc


def lerch_series(z, s, a, nmax=200000):
    """Direct power series, |z| < 1; the second of the two Phi methods."""
    acc = mp.mpc(0)
    zp = mp.mpc(1)
    prev = mp.inf
    for n in range(nmax):
        term = zp * mp.power(n + a, -s)
        acc += term
        t = abs(term)
        if n > 8 and t <= prev and t < mp.mpf(10) ** (-mp.mp.dps - 3) * (1 + abs(acc)):
            return acc
        prev = t
        zp *= z
    raise RuntimeError("lerch series did not converge")


def lerch_phi(p, q, s, a):
    return lerch_unit(int(p), int(q), s, a)


def specfun_value(op, args):
    pi = _pi()
    if op == "log_gamma":
        z = cnum(args[0])
        if z.imag == 0 and z.real < 0:
            z = mp.mpc(z.real, mp.mpf(10) ** (-mp.mp.dps - 8))
        return mp.loggamma(z)
    if op == "polygamma":
        return mp.polygamma(int(str(args[0])), cnum(args[1]))
    if op == "hurwitz_zeta":
        return mp.zeta(cnum(args[0]), cnum(args[1]))
    if op == "riemann_zeta":
        return mp.zeta(cnum(args[0]))
    if op == "zeta_derivative":
        return mp.zeta(cnum(args[0]), 1, 1)
    if op == "lerch_phi":
        return lerch_phi(str(args[0]), str(args[1]), cnum(args[2]), cnum(args[3]))
    if op == "lerch_phi_s_derivative":
        p, q = int(str(args[0])), int(str(args[1]))
        s0, a = cnum(args[2]), cnum(args[3])
        z = mp.exp(2j * mp.pi * mp.mpf(p) / q)
        # differencing the decomposition would cancel its zeta poles at
        # s = 1 +- h; mpmath's lerchphi is smooth there
        return mp.diff(lambda t: mp.lerchphi(z, t, a), s0)
    if op == "polylog":
        return mp.polylog(cnum(args[0]), cnum(args[1]))
    if op == "stieltjes_gamma":
        return mp.stieltjes(int(str(args[0])), cnum(args[1]).real)
    if op == "harmonic":
        return mp.harmonic(cnum(args[0]))
    raise ValueError(f"unknown specfun op {op!r}")


def constant_value(name):
    return {
        "catalan": lambda: mp.catalan,
        "apery": lambda: mp.apery,
        "log_glaisher": lambda: mp.log(mp.glaisher),
        "euler_gamma": lambda: mp.euler,
    }[name]()
