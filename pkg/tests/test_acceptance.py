"""Acceptance gate: every criterion at its stated tolerance, one printed
pass/fail line per criterion.

Two catalog displays (E19, K6) fail verification because of misprints in
their printed closed forms; the evidence (imaginary parts matching to 1e-14,
an independent re-derivation of K6 agreeing with quadrature) lives in the
entry notes and the decisions ledger.  Those two cases are strict-xfail so
the documented-honest state is visible without masking regressions.
"""

import json
import math
import time
from pathlib import Path

import pytest

from malmsten import quad as Q
from malmsten import selftest
from malmsten import specfun as sf
from malmsten import verify as V
from malmsten.identities import CATALOG, KNOWN_MISPRINTS, get_entry
from malmsten.identities.base import theorem_sum

REPO = Path(__file__).resolve().parents[1]
GOLDEN = REPO / "fixtures" / "golden.json"

_LINES = []


def criterion(name, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
    _LINES.append(line)
    print(line)
    return ok


def teardown_module(module):
    print("\n===== acceptance summary =====")
    for line in _LINES:
        print(line)


def test_criterion_theorem_sweep():
    t0 = time.time()
    reports = V.theorem_sweep(seed=20260810, points=50)
    elapsed = time.time() - t0
    violations = [r for r in reports
                  if not (r.rel_err <= 1e-7 or r.abs_err <= 1e-9)]
    ok = criterion(
        "theorem sweep: 50 seeded strip points, k<=3, n<=4, "
        "|LHS-RHS| <= max(1e-7 rel, 1e-9 abs), runtime <= 120 s",
        not violations and elapsed <= 120.0,
        f"worst rel {max(r.rel_err for r in reports):.2e}, "
        f"{elapsed:.1f}s")
    assert ok, violations


def test_criterion_gr2_sweep():
    reports = V.gr2_sweep(seed=20260810, points=25)
    worst = max(r.rel_err for r in reports)
    ok = criterion("corrected table entry sweep: 25 points, <= 1e-8 rel",
                   worst <= 1e-8, f"worst rel {worst:.2e}")
    assert ok


_REGULAR_IDS = [e.id for e in CATALOG.values()
                if e.id.startswith(("E", "K")) and e.klass != "finite-part"]


@pytest.mark.parametrize("entry_id", [
    pytest.param(i, marks=pytest.mark.xfail(
        strict=True, reason=f"printed-form misprint: {KNOWN_MISPRINTS[i]}")
    if i in KNOWN_MISPRINTS else ()) for i in _REGULAR_IDS])
def test_criterion_regular_entries(entry_id):
    rep = V.verify_entry(entry_id)
    assert rep.status == "pass", (rep.abs_err, rep.rel_err)


def test_criterion_regular_entries_summary():
    fails = [i for i in _REGULAR_IDS
             if V.verify_entry(i).status != "pass"]
    ok = criterion(
        "regular catalog entries (E1-E29 less finite-part, K1-K6) at 1e-8",
        not fails,
        "all pass" if not fails else
        f"documented printed-form misprints: {', '.join(fails)}")
    # the two documented misprints keep this criterion honestly red;
    # any OTHER failure is a regression and must break the suite
    assert set(fails) <= set(KNOWN_MISPRINTS)


def test_criterion_e29_exact_i_pi():
    rep = V.verify_entry("E29")
    ok = criterion("E29 returns i pi: |Re| <= 1e-9 and |Im - pi| <= 1e-9",
                   abs(rep.lhs.real) <= 1e-9
                   and abs(rep.lhs.imag - math.pi) <= 1e-9,
                   f"lhs = {rep.lhs:.3e}")
    assert ok


def test_criterion_pv_entries():
    ids = [f"P{i}" for i in (1, 2, 3, 4, 5, 6, 7, 8, 11)]
    reports = {i: V.verify_entry(i) for i in ids}
    fails = [i for i, r in reports.items()
             if not (min(r.abs_err, r.rel_err) <= 1e-6 and r.passed)]
    worst = max(min(r.abs_err, r.rel_err) for r in reports.values())
    ok = criterion("PV entries (P1-P8, P11) at 1e-6", not fails,
                   f"worst {worst:.2e}")
    assert ok, fails


def test_criterion_finite_part_entries():
    ids = ["P9", "P10", "P12"]
    reports = {i: V.verify_entry(i) for i in ids}
    fails = [i for i, r in reports.items()
             if not (min(r.abs_err, r.rel_err) <= 1e-3 and r.passed)]
    assert all(get_entry(i).experimental for i in ids)
    worst = max(min(r.abs_err, r.rel_err) for r in reports.values())
    ok = criterion("finite-part entries (P9, P10, P12) at 1e-3, "
                   "reported experimental", not fails, f"worst {worst:.2e}")
    assert ok, fails


def test_criterion_specfun_invariants():
    rc = selftest.run(verbose=False)
    d0 = abs(sf.zeta_derivative(0.0) - (-0.5 * math.log(2 * math.pi)))
    d1 = abs(sf.zeta_derivative(-1.0)
             - (1.0 / 12.0 - sf.constants().log_glaisher))
    ok = criterion(
        "specfun invariant suite at 1e-12/1e-13; zeta'(0) and zeta'(-1) "
        "at 1e-10", rc == 0 and d0 <= 1e-10 and d1 <= 1e-10,
        f"zeta'(0) err {d0:.1e}, zeta'(-1) err {d1:.1e}")
    assert ok


def test_criterion_fixture_regression(tmp_path):
    summary = V.check_fixtures(GOLDEN)
    clean = summary.ok and summary.checked >= 60
    payload = json.loads(GOLDEN.read_text(encoding="utf-8"))
    rec = payload["records"][0]
    digits = list(rec["re"])
    pos = digits.index(".") + 7  # perturb at the 1e-6 place
    digits[pos] = "1" if digits[pos] != "1" else "2"
    rec["re"] = "".join(digits)
    bad = tmp_path / "perturbed.json"
    bad.write_text(json.dumps(payload))
    perturbed = V.check_fixtures(bad)
    detected = len(perturbed.mismatches) == 1
    ok = criterion(
        "fixture regression: zero mismatches on the committed set; a "
        "perturbed fixture is detected",
        clean and detected,
        f"{summary.checked} records clean; perturbation flagged: {detected}")
    assert ok


def test_criterion_stirling_gate():
    def unsigned(j, p):
        return abs(sf.stirling_first(j, p))

    def second_kind(j, p):
        if p > j:
            return 0
        row = [[1]]
        for jj in range(1, j + 1):
            prev = row[-1]
            cur = [0] * (jj + 1)
            for pp in range(jj + 1):
                cur[pp] = (pp * prev[pp] if pp < jj else 0) \
                    + (prev[pp - 1] if pp >= 1 else 0)
            row.append(cur)
        return row[j][p]

    candidates = {"signed-first-kind": sf.stirling_first,
                  "unsigned-first-kind": unsigned,
                  "second-kind": second_kind}
    points = [
        {"m": 0.35 + 0.4j, "k": 2, "n": 3, "a": 1.5, "b": 2.0, "gamma": 0.75},
        {"m": 0.6 + 0.25j, "k": 1, "n": 4, "a": 0.8, "b": 1.2, "gamma": 3.0},
        {"m": 0.2 + 0.7j, "k": 3, "n": 2, "a": 2.0, "b": 4.0, "gamma": 1.0},
    ]
    passing = set(candidates)
    for pt in points:
        p = get_entry("THM").params(pt)
        truth = Q.integrate_semi_infinite(get_entry("THM").lhs(p), 1e-11).value
        for name, fn in candidates.items():
            rhs = theorem_sum(p.m, int(p.k), math.log(p.a.real), p.b,
                              p.gamma, int(p.n), stirling=fn)
            if not abs(rhs - truth) <= 1e-8 * (1 + abs(truth)):
                passing.discard(name)
    manifest = json.loads((REPO / "src" / "malmsten" / "data"
                           / "manifest.json").read_text())
    ok = criterion(
        "stirling interpretation gate: exactly one candidate passes the "
        "theorem sweep and the manifest records it",
        passing == {"signed-first-kind"}
        and manifest["stirling_interpretation"] == "signed-first-kind",
        f"passing set: {sorted(passing)}")
    assert ok
