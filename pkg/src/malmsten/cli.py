"""Command-line entry point.

Commands: list, show <id>, verify <id|all>, sweep <id>, selftest,
fixtures --check <path>.  Exit codes: 0 success, 1 verification failure,
2 usage error (argparse default).
"""

import argparse
import os
import sys

from . import __version__
from . import verify as V
from .identities import CATALOG, KNOWN_MISPRINTS, get_entry
from .specfun import DomainError

FIXTURES_ENV = "MALMSTEN_FIXTURES"


def _parse_value(text):
    t = text.strip().replace("I", "j")
    try:
        if "j" in t:
            return complex(t)
        f = float(t)
        return int(f) if f == int(f) and ("." not in t and "e" not in t.lower()) else f
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse number {text!r}")


def _parse_param(text):
    if "=" not in text:
        raise argparse.ArgumentTypeError("--param expects name=value")
    name, val = text.split("=", 1)
    return name.strip(), _parse_value(val)


def _parse_class_tol(text):
    if "=" not in text:
        raise argparse.ArgumentTypeError("--tol-class expects CLASS=VALUE")
    name, val = text.split("=", 1)
    name = name.strip()
    if name not in V.TOLERANCE_CLASSES:
        raise argparse.ArgumentTypeError(
            f"unknown tolerance class {name!r}; "
            f"one of {sorted(V.TOLERANCE_CLASSES)}")
    value = float(val)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance overrides must be positive")
    return name, value


def _apply_numeric_config(args):
    for name, value in (getattr(args, "tol_class", None) or []):
        V.TOLERANCE_CLASSES[name] = value
    from . import quad
    if getattr(args, "quad_levels", None) or getattr(args, "quad_node_cap", None):
        try:
            quad.configure_caps(max_level=args.quad_levels,
                                node_cap=args.quad_node_cap)
        except ValueError as exc:
            raise DomainError(str(exc))


def _parse_grid(text):
    """name=lo:hi, name=lo:hi:int, name=v1|v2|v3, or name=value."""
    grid = {}
    for piece in text.split(","):
        if "=" not in piece:
            raise argparse.ArgumentTypeError(f"bad grid component {piece!r}")
        name, val = piece.split("=", 1)
        name = name.strip()
        val = val.strip()
        if "|" in val:
            grid[name] = [_parse_value(v) for v in val.split("|")]
        elif ":" in val:
            parts = val.split(":")
            if len(parts) == 3 and parts[2] == "int":
                grid[name] = (int(float(parts[0])), int(float(parts[1])), "int")
            elif len(parts) == 2:
                grid[name] = (float(parts[0]), float(parts[1]))
            else:
                raise argparse.ArgumentTypeError(f"bad range {val!r}")
        else:
            grid[name] = _parse_value(val)
    return grid


def _emit(reports, args):
    out = sys.stdout
    close = False
    if args.output:
        out = open(args.output, "w", encoding="utf-8")
        close = True
    try:
        if args.format == "records":
            V.write_records(reports, out)
        else:
            out.write(V.render_table(reports) + "\n")
    finally:
        if close:
            close_msg = f"wrote {len(reports)} report(s) to {args.output}"
            print(close_msg)
            out.close()
    return 0 if V.aggregate_ok(reports) else 1


def cmd_list(args):
    for e in CATALOG.values():
        flag = " (printed form fails; see notes)" if e.id in KNOWN_MISPRINTS else ""
        print(f"{e.id:5s} {e.klass:14s} params: "
              f"{', '.join(e.active) if e.active else '-'}{flag}")
    return 0


def cmd_show(args):
    e = get_entry(args.id)
    print(f"id:          {e.id}")
    print(f"class:       {e.klass}"
          + ("  [experimental]" if e.experimental else ""))
    print(f"tolerance:   {V.TOLERANCE_CLASSES[e.klass]:.0e}")
    print(f"active:      {', '.join(e.active) if e.active else '(none)'}")
    if e.defaults:
        print(f"defaults:    {e.defaults}")
    if e.orientation != "upper":
        print(f"orientation: {e.orientation}")
    print(f"statement:   {e.statement}")
    if e.notes:
        print(f"notes:       {e.notes}")
    if e.id in KNOWN_MISPRINTS:
        print(f"warning:     printed closed form fails verification: "
              f"{KNOWN_MISPRINTS[e.id]}")
    return 0


def cmd_verify(args):
    _apply_numeric_config(args)
    overrides = dict(args.param or [])
    if args.id == "all":
        if overrides:
            print("--param applies to a single entry, not 'all'",
                  file=sys.stderr)
            return 2
        reports = V.verify_all(tol_override=args.tol, jobs=args.jobs)
    else:
        try:
            reports = [V.verify_entry(args.id, overrides or None,
                                      tol_override=args.tol)]
        except DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    return _emit(reports, args)


def cmd_sweep(args):
    _apply_numeric_config(args)
    if args.id == "THM" and not args.grid:
        reports = V.theorem_sweep(args.seed, points=args.points,
                                  tol_override=args.tol)
    elif args.id == "GR2" and not args.grid:
        reports = V.gr2_sweep(args.seed, points=args.points,
                              tol_override=args.tol)
    else:
        if not args.grid:
            print("sweep requires --grid for this entry", file=sys.stderr)
            return 2
        reports = V.sweep(args.id, _parse_grid(args.grid), args.seed,
                          points=args.points, tol_override=args.tol)
    return _emit(reports, args)


def cmd_selftest(args):
    from . import selftest
    return selftest.run(verbose=True)


def cmd_fixtures(args):
    path = args.check or os.environ.get(FIXTURES_ENV)
    if not path:
        print(f"no fixture path: pass --check or set {FIXTURES_ENV}",
              file=sys.stderr)
        return 2
    summary = V.check_fixtures(path)
    print(f"checked {summary.checked} fixture record(s)")
    for key, err, tol in summary.mismatches:
        print(f"MISMATCH {key}: scaled error {err:.3e} > tol {tol:.0e}")
    for key, msg in summary.errors:
        print(f"ERROR    {key}: {msg}")
    if summary.ok:
        print("all fixtures reproduced")
        return 0
    return 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="malmsten",
        description="Numerically certify the log-log integral catalog "
                    "against its special-function closed forms.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog entries").set_defaults(fn=cmd_list)

    p = sub.add_parser("show", help="show one entry")
    p.add_argument("id")
    p.set_defaults(fn=cmd_show)

    def add_common(p):
        p.add_argument("--tol", type=float, default=None,
                       help="tolerance override (abs-or-rel)")
        p.add_argument("--tol-class", action="append", type=_parse_class_tol,
                       metavar="CLASS=VALUE", dest="tol_class",
                       help="override one tolerance class, e.g. pv=1e-7")
        p.add_argument("--quad-levels", type=int, default=None,
                       help="tanh-sinh halving cap per panel (default 12)")
        p.add_argument("--quad-node-cap", type=int, default=None,
                       help="node cap per panel (default 200000)")
        p.add_argument("--format", choices=("table", "records"),
                       default="table")
        p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="verify entries at a parameter point")
    p.add_argument("id", help="catalog id or 'all'")
    p.add_argument("--param", action="append", type=_parse_param,
                   metavar="NAME=VALUE",
                   help="override a parameter (complex as re+imI)")
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="seeded parameter sweep")
    p.add_argument("id")
    p.add_argument("--grid", default=None,
                   help="name=lo:hi[,name=lo:hi:int,name=v1|v2,...]; "
                        "THM and GR2 have built-in acceptance grids")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--points", type=int, default=25)
    add_common(p)
    p.set_defaults(fn=cmd_sweep)

    sub.add_parser("selftest",
                   help="run the special-function invariant suite") \
        .set_defaults(fn=cmd_selftest)

    p = sub.add_parser("fixtures", help="check golden fixture files")
    p.add_argument("--check", default=None, metavar="PATH")
    p.set_defaults(fn=cmd_fixtures)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
