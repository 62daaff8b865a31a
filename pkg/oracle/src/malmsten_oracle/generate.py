"""Golden-fixture generation from a job manifest.

Reads a JSON job list, evaluates every target at the working precision with
the independent mpmath stack, and writes the fixture file consumed by the
primary suite's fixture checker.  The file is only written when every job
succeeds; failures are itemized on stderr.
"""

import argparse
import json
import sys

import mpmath as mp

from . import evaluator, formulas

DIGITS = 32
DEFAULT_DPS = 50


def evaluate_job(job):
    kind = job["kind"]
    if kind == "specfun":
        return evaluator.specfun_value(job["op"], job["args"])
    if kind == "constant":
        return evaluator.constant_value(job["name"])
    if kind == "entry":
        fn = formulas.ENTRY_FORMULAS.get(job["id"])
        if fn is None:
            raise ValueError(f"no oracle formula for entry {job['id']}")
        return fn(job.get("params", {}))
    raise ValueError(f"unknown job kind {kind!r}")


def _dec(x):
    # fixed 32-significant-digit decimal strings; strip_zeros=False keeps
    # the format stable so regeneration is byte-identical
    return mp.nstr(x, DIGITS, strip_zeros=False)


def generate_fixtures(jobs, dps=DEFAULT_DPS):
    mp.mp.dps = dps
    records = []
    failures = []
    for job in jobs:
        try:
            val = mp.mpc(evaluate_job(job))
        except Exception as exc:
            failures.append((job.get("key", "<unkeyed>"),
                             f"{type(exc).__name__}: {exc}"))
            continue
        rec = {k: job[k] for k in
               ("key", "kind", "op", "args", "name", "id", "params",
                "rel_tol", "method") if k in job}
        rec["re"] = _dec(val.real)
        rec["im"] = _dec(val.imag)
        records.append(rec)
    if failures:
        return None, failures
    payload = {
        "meta": {
            "generator": "malmsten-oracle",
            "precision_dps": dps,
            "digits": DIGITS,
            "format": "malmsten-golden-fixtures/1",
            "records": len(records),
        },
        "records": records,
    }
    return payload, []


def main(argv=None):
    ap = argparse.ArgumentParser(prog="malmsten-oracle")
    ap.add_argument("--jobs", required=True, help="job manifest JSON")
    ap.add_argument("--out", required=True, help="fixture file to write")
    ap.add_argument("--dps", type=int, default=DEFAULT_DPS)
    args = ap.parse_args(argv)
    with open(args.jobs, "r", encoding="utf-8") as fh:
        manifest = json.load(fh)
    payload, failures = generate_fixtures(manifest["jobs"],
                                          dps=manifest.get("precision_dps",
                                                           args.dps))
    if failures:
        for key, msg in failures:
            print(f"FAILED {key}: {msg}", file=sys.stderr)
        return 1
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {payload['meta']['records']} fixture records to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
