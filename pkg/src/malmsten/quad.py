"""Branch-aware quadrature over (0, inf) for complex-valued integrands.

The workhorse is tanh-sinh (double-exponential) panel integration with node
positions carried as exact distances from the panel endpoints: integrable
endpoint singularities as strong as u^(-0.95) need nodes at distances far
below 1e-16 * endpoint, where forming lo + u in float64 would collapse onto
the endpoint.  Entries with algebraic-log behaviour at an interior point can
attach per-anchor offset evaluators so log(x) near x = 1 is computed as
log1p(+-u).

Interior poles are handled three ways:
  * integrate_pv       - classical symmetric-pair Cauchy principal value;
  * integrate_contour  - deformation onto an upper (or mirrored lower)
                         semicircular arc around each pole, the regularization
                         that reproduces the catalog's printed closed forms
                         (for an analytic simple pole it equals PV - i pi Res);
  * integrate_finite_part - epsilon-exclusion ladder fitted to
                         {ln(e)/e, 1/e, ln(e), 1, e ln(e), e} and completed by
                         the arc terms, for double poles at the log branch
                         point.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

PI = math.pi

KINDS = ("endpoint-log", "algebraic", "simple-pole", "double-pole",
         "branch-point", "removable")

_POLE_KINDS = {"simple-pole", "double-pole"}


@dataclass(frozen=True)
class SingularPoint:
    location: float
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown singularity kind {self.kind!r}")


@dataclass(frozen=True)
class IntegrandSpec:
    """A complex-valued integrand on (domain[0], domain[1]) with annotations.

    evaluator maps a complex128 ndarray to a complex128 ndarray and must obey
    the package branch conventions on the real axis (and, for entries that go
    through the contour routes, be analytic just above it).
    offset_evals maps (anchor, side) to g(u) = f(anchor + side*u) evaluated
    stably for u down to ~1e-300.
    """

    evaluator: Callable
    singular_points: tuple = ()
    branch_note: str = ""
    domain: tuple = (0.0, math.inf)
    offset_evals: dict = field(default_factory=dict)

    def __post_init__(self):
        pts = tuple(sorted(self.singular_points, key=lambda s: s.location))
        object.__setattr__(self, "singular_points", pts)

    def eval(self, x):
        x = np.asarray(x, dtype=np.complex128)
        with np.errstate(all="ignore"):
            return np.asarray(self.evaluator(x), dtype=np.complex128)

    def eval_offset(self, anchor, side, u):
        """f(anchor + side*u) with u an exact distance.

        Without a custom offset evaluator, distances below ~4 eps |anchor|
        would collapse onto the anchor in float64; those nodes are dropped
        (their double-exponential weights put them past any log-strength
        tail).  Entries with stronger interior singularities supply custom
        evaluators and keep the full depth.
        """
        u = np.asarray(u)
        if u.dtype.kind == "c":
            u = u.real  # offsets are distances; panel plumbing may pass complex
        g = self.offset_evals.get((anchor, side))
        if g is not None:
            with np.errstate(all="ignore"):
                return np.asarray(g(np.asarray(u, dtype=np.float64)),
                                  dtype=np.complex128)
        cutoff = 4.0 * np.finfo(np.float64).eps * abs(anchor)
        if cutoff > 0.0:
            u = np.asarray(u, dtype=np.float64)
            tiny = u < cutoff
            if np.any(tiny):
                vals = self.eval(anchor + side * np.where(tiny, cutoff, u))
                return np.where(tiny, 0.0, vals)
        return self.eval(anchor + side * u)

    def poles(self):
        return tuple(p.location for p in self.singular_points
                     if p.kind in _POLE_KINDS)

    def interior_splits(self, lo, hi):
        pts = sorted({p.location for p in self.singular_points
                      if lo < p.location < hi and p.kind not in _POLE_KINDS})
        return pts


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    nodes: int
    status: str  # converged | max-nodes | suspected-divergence

    def __add__(self, other):
        order = ("converged", "max-nodes", "suspected-divergence")
        status = max(self.status, other.status, key=order.index)
        return QuadResult(self.value + other.value,
                          self.err_estimate + other.err_estimate,
                          self.nodes + other.nodes, status)


MAX_LEVEL = 12       # halvings per panel; configure_caps() adjusts
NODE_CAP = 200_000   # nodes per panel


def configure_caps(max_level=None, node_cap=None):
    """Process-wide quadrature caps (the CLI's knobs)."""
    global MAX_LEVEL, NODE_CAP
    if max_level is not None:
        if max_level < 1:
            raise ValueError("max_level must be positive")
        MAX_LEVEL = int(max_level)
    if node_cap is not None:
        if node_cap < 1:
            raise ValueError("node_cap must be positive")
        NODE_CAP = int(node_cap)


@lru_cache(maxsize=32)
def _ts_nodes(level):
    """New tanh-sinh nodes introduced at this halving level.

    Returns (delta, weight) with delta = (1 - t_j)/2 = 1/(1 + exp(2 y_j))
    computed in exp form, exact down to ~1e-300.  Weights exclude the step h
    (applied at summary time, so already-accumulated nodes rescale when the
    step halves) but include the sech^2 factor as 4 delta (1 - delta).
    """
    h = 1.0 / (1 << level)
    if level == 0:
        js = np.arange(0, int(6.56 / h) + 1)
    else:
        js = np.arange(1, int(6.56 / h) + 1, 2)
    t = js * h
    y = 0.5 * PI * np.sinh(t)
    with np.errstate(all="ignore"):
        e = np.exp(-2.0 * y)          # underflows gracefully to 0
        delta = e / (1.0 + e)
    w = 0.5 * PI * np.cosh(t) * 4.0 * delta * (1.0 - delta)
    keep = delta > 1e-300
    return delta[keep], w[keep]


def _panel(spec, lo, hi, tol, max_level=None,
           left_anchor=None, right_anchor=None):
    """tanh-sinh on one panel free of interior singularities."""
    if max_level is None:
        max_level = MAX_LEVEL  # module-level so the CLI cap flags apply
    if not hi > lo:
        raise ValueError("panel requires lo < hi")
    L = hi - lo
    la = lo if left_anchor is None else left_anchor
    ra = hi if right_anchor is None else right_anchor
    total = 0.0 + 0.0j
    nodes = 0
    prev = None
    err = math.inf
    for level in range(max_level + 1):
        delta, w = _ts_nodes(level)
        if level == 0:
            # j = 0 sits in the middle; evaluate it once from the left
            fl = spec.eval_offset(la, +1.0, (lo - la) + L * delta)
            fr = spec.eval_offset(ra, -1.0, (ra - hi) + L * delta[1:])
            contrib = np.concatenate([fl, fr]) * np.concatenate([w, w[1:]])
        else:
            fl = spec.eval_offset(la, +1.0, (lo - la) + L * delta)
            fr = spec.eval_offset(ra, -1.0, (ra - hi) + L * delta)
            contrib = np.concatenate([fl, fr]) * np.concatenate([w, w])
        bad = ~np.isfinite(contrib)
        if np.any(bad):
            wts = np.concatenate([w, w if level else w[1:]])
            if np.any(wts[bad] > 1e-250):
                return QuadResult(complex(np.nan, np.nan), math.inf, nodes,
                                  "suspected-divergence")
            contrib = np.where(bad, 0.0, contrib)
        total = total + complex(contrib.sum())
        nodes += contrib.size
        cur = total * (L / 2.0) * (1.0 / (1 << level))
        if prev is not None:
            err = abs(cur - prev)
            if err <= tol * max(1.0, abs(cur)):
                return QuadResult(complex(cur), err, nodes, "converged")
            if nodes > NODE_CAP:
                break
        prev = cur
    # level/node cap hit mid-ladder: the remaining tail of a still-live
    # ladder can decay far slower than the last observed ratio (oscillatory
    # integrands creep toward ratio 1), so price it pessimistically
    if math.isfinite(err):
        err = 10.0 * err
    return QuadResult(complex(prev), err, nodes, "max-nodes")


def integrate_finite(spec, lo, hi, tol):
    """Integrate over (lo, hi); interior integrable singulars split panels."""
    splits = spec.interior_splits(lo, hi)
    pts = [lo] + splits + [hi]
    out = None
    for a, b in zip(pts, pts[1:]):
        r = _panel(spec, a, b, tol)
        out = r if out is None else out + r
    return out


_TAIL_TMIN = 1e-30
_TAIL_DEPTH = 10


def _tail_spec(spec, T):
    # Image points are capped at T/_TAIL_TMIN ~ 1e30 per segment so power
    # factors up to degree ~9 cannot overflow into complex-division NaNs;
    # slowly decaying integrands get further x -> T'/t segments from the
    # caller until the remaining stub is negligible.
    f = spec.eval

    def g(t):
        t = np.asarray(t, dtype=np.complex128)
        small = np.abs(t) < _TAIL_TMIN
        ts = np.where(small, _TAIL_TMIN, t)
        return np.where(small, 0.0, f(T / ts) * T / (ts * ts))

    return IntegrandSpec(evaluator=g, domain=(0.0, 1.0))


def _tail_stub(spec, X):
    # remaining mass past X for ~x^(-1-d) decay: |f(X)| X / d, d from slope
    with np.errstate(all="ignore"):
        f1, f2 = np.abs(spec.eval(np.array([X, 8.0 * X])))
    if not (math.isfinite(f1) and math.isfinite(f2)) or f1 == 0.0:
        return 0.0
    slope = math.log(max(f2, 1e-320) / f1) / math.log(8.0)
    d = max(-slope - 1.0, 0.02)
    return f1 * X / d


def _integrate_tail(spec, T, tol):
    """sum of mapped segments (T, T/eps), (T/eps, T/eps^2), ... until the
    dropped stub beyond the last segment is below the requested tolerance."""
    out = None
    Tcur = T
    stub = math.inf
    for _ in range(_TAIL_DEPTH):
        seg = integrate_finite(_tail_spec(spec, Tcur), 0.0, 1.0, tol)
        out = seg if out is None else out + seg
        Tcur = Tcur / _TAIL_TMIN
        stub = _tail_stub(spec, 2.0 * Tcur)
        if stub <= 0.2 * tol * max(1.0, abs(out.value)):
            return QuadResult(out.value, out.err_estimate + stub,
                              out.nodes, out.status)
    return QuadResult(out.value, out.err_estimate + stub, out.nodes,
                      "max-nodes")


def _tail_diverges(spec, T):
    xs = np.array([T * 1e2, T * 1e4, T * 1e6])
    vals = np.abs(spec.eval(xs)) * xs ** 1.05
    vals = vals[np.isfinite(vals)]
    return vals.size >= 2 and bool(np.all(np.diff(vals) > 0)) and vals[-1] > 1e-12


def _pieces(spec, lo, hi, tol, extra_splits=()):
    """Integrate (lo, hi) splitting at integrable singular points (and 1)."""
    splits = set(spec.interior_splits(lo, hi)) | {s for s in extra_splits if lo < s < hi}
    if lo < 1.0 < hi:
        splits.add(1.0)
    if math.isinf(hi):
        finite = sorted(splits)
        T = max([2.0, lo + 1.0] + [2.0 * s for s in finite])
        if _tail_diverges(spec, T):
            return QuadResult(complex(np.nan, np.nan), math.inf, 3,
                              "suspected-divergence")
        out = _pieces(spec, lo, T, tol, extra_splits=finite)
        return out + _integrate_tail(spec, T, tol)
    pts = [lo] + sorted(splits) + [hi]
    out = QuadResult(0j, 0.0, 0, "converged")
    for a, b in zip(pts, pts[1:]):
        if b - a <= 1e-13 * max(1.0, abs(a)):
            continue
        out = out + _panel(spec, a, b, tol)
    return out


def integrate_semi_infinite(spec, tol):
    """Integral over the spec's domain, mapping the tail via x -> T/t."""
    lo, hi = spec.domain
    return _pieces(spec, lo, hi, tol)


def _window_radius(spec, pole, cap=0.5):
    lo, hi = spec.domain
    others = [p.location for p in spec.singular_points
              if p.location != pole] + [lo]
    if not math.isinf(hi):
        others.append(hi)
    dist = min(abs(pole - q) for q in others) if others else cap
    return min(cap, dist / 2.0)


def integrate_pv(spec, pole, tol):
    """Symmetric-pair Cauchy principal value across a simple pole.

    The paired integrand g(u) = f(pole+u) + f(pole-u) cancels the 1/u part;
    a surviving 1/u term (pole sitting on a branch jump) shows up as a
    suspected-divergence status rather than a silently wrong number.

    Without custom offset evaluators at the pole, forming pole + u in
    float64 feeds the pair cancellation eps/u^2 noise, so the pairing is cut
    at u_min ~ 1e-9 and the dropped stub plus noise goes into err_estimate
    (~1e-7 floor).  Supply offset evaluators for full accuracy.
    """
    r = _window_radius(spec, pole)

    def paired(u):
        return spec.eval_offset(pole, +1.0, u) + spec.eval_offset(pole, -1.0, u)

    exact = (pole, +1.0) in spec.offset_evals and (pole, -1.0) in spec.offset_evals
    pspec = IntegrandSpec(evaluator=paired, domain=(0.0, r))
    if exact:
        core = _panel(pspec, 0.0, r, tol)
    else:
        u_min = 1e-9 * max(1.0, abs(pole))
        core = _panel(pspec, u_min, r, tol)
        g0 = complex(paired(np.array([u_min * 4.0]))[0])
        stub = abs(g0) * u_min * (2.0 + abs(math.log(u_min)))
        fval = abs(complex(spec.eval(np.array([pole + 1e-3 * r]))[0]))
        noise = fval * 1e-3 * r * np.finfo(float).eps / u_min
        core = QuadResult(core.value, core.err_estimate + stub + noise,
                          core.nodes, core.status)
    lo, hi = spec.domain
    left = _pieces(spec, lo, pole - r, tol)
    right = _pieces(spec, pole + r, hi, tol)
    return left + core + right


def _arc(spec, pole, r, tol, orientation=+1):
    """Semicircular detour above (orientation +1) the pole, phi: pi -> 0."""

    def g(phi):
        phi = np.real(np.asarray(phi)).astype(np.float64)
        z = pole + r * np.exp(1j * orientation * phi)
        return -spec.eval(z) * 1j * orientation * r * np.exp(1j * orientation * phi)

    return _panel(IntegrandSpec(evaluator=g, domain=(0.0, PI)), 0.0, PI, tol)


def integrate_contour(spec, poles, tol, orientation="upper"):
    """Deform over upper semicircles at each interior pole.

    orientation="lower" returns the mirrored value by conjugation and is only
    meaningful for integrands that are real-coefficient (Schwarz-symmetric);
    the catalog uses it for a single double-pole entry whose printed value
    carries the opposite branch.
    """
    if orientation == "lower":
        up = integrate_contour(spec, poles, tol, orientation="upper")
        return QuadResult(up.value.conjugate(), up.err_estimate, up.nodes,
                          up.status)
    poles = sorted(poles)
    lo, hi = spec.domain
    rs = []
    for i, p in enumerate(poles):
        neighbors = [q for q in poles if q != p]
        others = [q.location for q in spec.singular_points
                  if q.location != p and q.kind in _POLE_KINDS]
        cand = [abs(p - q) / 2.0 for q in neighbors + others] + [abs(p - lo) / 2.0]
        if not math.isinf(hi):
            cand.append(abs(hi - p) / 2.0)
        # integrable singular points may sit on the arc's chord; stay inside
        for q in spec.singular_points:
            if q.location != p and q.kind not in _POLE_KINDS:
                cand.append(abs(p - q.location) / 1.25)
        rs.append(min([0.5] + cand))
    out = QuadResult(0j, 0.0, 0, "converged")
    prev = lo
    for p, r in zip(poles, rs):
        if p - r - prev > 1e-13 * max(1.0, abs(p)):
            out = out + _pieces(spec, prev, p - r, tol)
        out = out + _arc(spec, p, r, tol)
        prev = p + r
    return out + _pieces(spec, prev, hi, tol)


_FP_KMIN, _FP_KMAX, _FP_FIT = 4, 14, 8


def integrate_finite_part(spec, pole, tol, orientation="upper"):
    """Hadamard-type finite part for a (double) pole at the log branch point.

    Exclusion values I(eps) on the ladder eps = 2^-k are fitted to
    A ln(eps)/eps + A'/eps + B ln(eps) + C + D eps ln(eps) + E eps, which
    validates the declared singularity structure (large residuals flag a
    mismatch) and prices the extrapolation error.  The returned value is the
    arc-completed I(eps) + (upper semicircle at eps), evaluated at the two
    extreme ladder radii; by Cauchy's theorem both agree with each other and
    with the contour deformation, and their spread enters err_estimate.
    EXPERIMENTAL class.
    """
    if orientation == "lower":
        up = integrate_finite_part(spec, pole, tol, orientation="upper")
        return QuadResult(up.value.conjugate(), up.err_estimate, up.nodes,
                          up.status)
    lo, hi = spec.domain
    r0 = 2.0 ** -_FP_KMIN
    outer = _pieces(spec, lo, pole - r0, tol) + _pieces(spec, pole + r0, hi, tol)

    def left(u):
        return spec.eval_offset(pole, -1.0, u)

    def right(u):
        return spec.eval_offset(pole, +1.0, u)

    eps = 2.0 ** -np.arange(_FP_KMIN, _FP_KMAX + 1)
    ladder = [outer.value]
    nodes = outer.nodes
    errs = outer.err_estimate
    for e_hi, e_lo in zip(eps, eps[1:]):
        ring = (_panel(IntegrandSpec(evaluator=left, domain=(0, 1)), e_lo, e_hi, tol)
                + _panel(IntegrandSpec(evaluator=right, domain=(0, 1)), e_lo, e_hi, tol))
        nodes += ring.nodes
        errs += ring.err_estimate
        ladder.append(ladder[-1] + ring.value)
    vals = np.array(ladder)
    le = np.log(eps)
    design = np.column_stack([le / eps, 1.0 / eps, le, np.ones_like(eps),
                              eps * le, eps])
    rows = slice(len(eps) - _FP_FIT, len(eps))
    coef, *_ = np.linalg.lstsq(design[rows], vals[rows], rcond=None)
    resid = float(np.abs(design[rows] @ coef - vals[rows]).max())
    arc_out = _arc(spec, pole, float(eps[0]), tol)
    arc_in = _arc(spec, pole, float(eps[-1]), tol)
    v_out = ladder[0] + arc_out.value
    v_in = ladder[-1] + arc_in.value
    value = v_out
    nodes += arc_out.nodes + arc_in.nodes
    spread = abs(v_out - v_in)
    err = resid + errs + spread + arc_out.err_estimate
    ok = resid <= 10.0 * tol * max(1.0, abs(value)) and \
        spread <= 10.0 * tol * max(1.0, abs(value))
    return QuadResult(complex(value), float(err), nodes,
                      "converged" if ok else "suspected-divergence")
