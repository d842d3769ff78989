"""Command-line front end: single bounds, table regeneration, verification suites.

Exit codes: 0 success, 1 usage error, 2 infeasible or trivial bound (or a
failed verification), 3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import functools
import io
import json
import math
import sys
from typing import Any, Sequence

from . import multi, single, tables, verify
from .graphlab import GraphTooLargeError

EXIT_OK, EXIT_USAGE, EXIT_TRIVIAL, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"5..20"``, ``"5,7,9"`` or a mix such as ``"5..8,10"``; inclusive."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise UsageError(f"empty item in range {text!r}")
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo_i, hi_i + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"cannot parse range {part!r}") from None
    if not out:
        raise UsageError("empty range")
    return out


# ---------------------------------------------------------------- formatting

def _jsonable(x: Any) -> Any:
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):  # numpy scalars
        return x.item()
    return x


def _dump_json(obj: Any) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"


def _dump_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    fields = list(rows[0])
    for r in rows[1:]:
        fields.extend(f for f in r if f not in fields)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in r.items()})
    return buf.getvalue()


def _fmt(v: Any) -> str:
    if isinstance(v, bool) or v is None:
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.8f}"
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    return str(v)


def _dump_pretty(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [[_fmt(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- bound

def _bound_result(args) -> dict:
    m = args.method
    if m == "t3":
        return single.theorem3_bound().as_dict()
    if m == "t9":
        return single.theorem9_bound(_need(args, "k")).as_dict()
    if m == "t4":
        k = _need(args, "k")
        if (args.a is None) != (args.b is None):
            raise UsageError("t4 needs both --a and --b, or neither (optimize)")
        if args.a is None:
            return single.theorem4_optimize(k).as_dict()
        return single.theorem4_bound(single.T4Params(args.a, args.b, k)).as_dict()
    if m == "t6":
        k = _need(args, "k")
        res = single.theorem6_optimize(k) if args.b0 is None else single.theorem6_bound(args.b0, k)
        return res.as_dict()
    if m == "t7":
        k = _need(args, "k")
        if (args.b_neg is None) != (args.b_pos is None):
            raise UsageError("t7 needs both --b-neg and --b-pos, or neither (optimize)")
        if args.b_neg is None:
            return single.theorem7_optimize(k, seed=args.seed).as_dict()
        return single.theorem7_bound(args.b_neg, args.b_pos, k).as_dict()
    if m == "t10":
        k, mm = _need(args, "k"), _need(args, "m")
        if args.v is not None:
            v = [float(x) for x in args.v.split(",")]
            rho = multi.rho_of_v(v, k, mm)
            comp = multi.as_composition(v)
            return multi.MultiBoundResult(k, mm, comp.r, tuple(comp.v), rho).as_dict()
        if args.r is not None:
            return multi.optimize_over_simplex(args.r, k, mm, seed=args.seed).as_dict()
        return multi.best_bound(k, mm, r_max=args.r_max, seed=args.seed).as_dict()
    raise UsageError(f"unknown method {m!r}")


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.method}")
    return val


def cmd_bound(args, out) -> int:
    try:
        rec = _bound_result(args)
    except ValueError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_TRIVIAL
    if args.format == "json":
        out.write(_dump_json(rec))
    else:
        flat = {"method": rec["method"], "value": rec["value"], "valid": rec["valid"], **rec["params"]}
        if "v" in flat:
            flat["v"] = " ".join(repr(x) for x in flat["v"])
        out.write(_dump_csv([flat]) if args.format == "csv" else _dump_pretty([flat]))
    return EXIT_OK if rec["valid"] else EXIT_TRIVIAL


# ---------------------------------------------------------------- table

TABLE_METHOD = {"3.3": "T4", "4.2": "T7,T6", "6.6": "T10"}


def _table_records(which: str, rows: list[dict]) -> list[dict]:
    recs = []
    for r in rows:
        if which == "3.3":
            recs.append({"method": "T4", "params": {"k": r["k"], "b": r["b"], "a": r["a"]},
                         "value": r["value"], "valid": r["valid"]})
        elif which == "4.2":
            recs.append({"method": "T7", "params": {"k": r["k"], "b_neg": r["b_neg"], "b_pos": r["b_pos"]},
                         "value": r["t7_value"], "valid": r["t7_value"] > 1})
            recs.append({"method": "T6", "params": {"k": r["k"], "b0": r["b0"]},
                         "value": r["t6_value"], "valid": r["t6_value"] > 1})
        else:
            recs.append({"method": "T10", "params": {"k": r["k"], "m": r["m"], "r": r["r"], "v": r["v"]},
                         "value": r["value"], "valid": r["valid"]})
    return recs


def cmd_table(args, out) -> int:
    which = args.which
    golden = tables.load_golden(which)
    if args.k is not None:
        ks = parse_range(args.k)
    else:
        ks = sorted({int(g["k"]) for g in golden})
    ms = parse_range(args.m) if args.m is not None else [1]
    if which == "3.3" and min(ks) < 3:
        raise UsageError("table 3.3 needs k >= 3")
    if which == "4.2" and min(ks) < 5:
        raise UsageError("table 4.2 needs k >= 5")
    if which == "6.6":
        if min(ks) < 3 or min(ms) < 1:
            raise UsageError("table 6.6 needs k >= 3 and m >= 1")
        if not 0 <= args.r_max <= 10:
            raise UsageError("--r-max must lie in [0, 10]")
    rows = tables.table_rows(which, ks, ms, r_max=args.r_max, workers=args.workers, seed=args.seed)

    diffs = None
    if args.diff is not None:
        ref = tables.load_golden(which, None if args.diff == "golden" else args.diff)
        diffs = tables.compare_rows(which, rows, ref)

    if args.format == "json":
        payload: dict[str, Any] = {"table": which, "rows": _table_records(which, rows)}
        if diffs is not None:
            payload["diff"] = [{"key": list(d.key), "column": d.column, "computed": d.computed,
                                "golden": d.golden, "abs_diff": d.abs_diff} for d in diffs]
            payload["max_abs_diff"] = max((d.abs_diff for d in diffs), default=None)
        out.write(_dump_json(payload))
        return EXIT_OK
    flat = [{"method": TABLE_METHOD[which], **r} for r in rows]
    out.write(_dump_csv(flat) if args.format == "csv" else _dump_pretty(flat))
    if diffs is not None:
        worst = max(diffs, key=lambda d: d.abs_diff, default=None)
        out.write("\n")
        drows = [{"key": "/".join(map(str, d.key)), "column": d.column, "computed": d.computed,
                  "golden": d.golden, "abs_diff": d.abs_diff} for d in diffs]
        out.write(_dump_csv(drows) if args.format == "csv" else _dump_pretty(drows))
        if worst is not None:
            out.write(f"max_abs_diff={worst.abs_diff!r} at {worst.column} "
                      f"{'/'.join(map(str, worst.key))}\n")
    return EXIT_OK


# ---------------------------------------------------------------- verify

SUITE_FLAGS = {
    "triangles": ("n", "n_min"),
    "cycles": ("n", "b", "a", "k", "random_tuples", "n_max", "seed"),
    "oddgirth": ("n", "b", "p"),
    "fprank": ("n", "p", "weight", "sets", "alpha_n_max", "seed"),
    "johnson": ("n",),
    "deletion": ("n", "weight", "product", "q", "l", "k_clique", "trials", "random_sets", "seed"),
}


def cmd_verify(args, out) -> int:
    params = {}
    for name in SUITE_FLAGS[args.suite]:
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    given = {n for n in ("n_min", "b", "a", "k", "p", "weight", "sets", "random_tuples", "n_max",
                         "alpha_n_max", "product", "q", "l", "k_clique", "trials", "random_sets")
             if getattr(args, n, None) is not None}
    stray = given - set(SUITE_FLAGS[args.suite])
    if stray:
        raise UsageError(f"suite {args.suite} does not take " +
                         ", ".join("--" + s.replace("_", "-") for s in sorted(stray)))
    try:
        rep = verify.run_suite(args.suite, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d = rep.as_dict()
    if args.format == "json":
        out.write(_dump_json(d))
    else:
        rows = [{"method": d["method"], "check": c.name, "passed": c.passed} for c in rep.checks]
        out.write(_dump_csv(rows) if args.format == "csv" else _dump_pretty(rows))
        if args.format == "pretty":
            out.write(f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks passed\n")
    return EXIT_OK if rep.passed else EXIT_TRIVIAL


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@functools.lru_cache(maxsize=1)
def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty",
                        help="output format (default: pretty)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches (default: 0)")
    common.add_argument("--workers", type=int, default=None,
                        help=f"worker processes for table rows (default: ${tables.WORKERS_ENV} or 1)")

    p = _Parser(prog="distbounds", description=__doc__.splitlines()[0],
                formatter_class=argparse.RawDescriptionHelpFormatter,
                epilog="exit codes: 0 ok, 1 usage, 2 infeasible/trivial or failed checks, 3 size guard")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bound", parents=[common], help="compute one bound")
    b.add_argument("method", choices=("t3", "t4", "t6", "t7", "t9", "t10"))
    b.add_argument("--k", type=int, help="forbidden clique size (t9: odd girth > 2k+1)")
    b.add_argument("--a", type=float, help="t4 parameter a (omit a and b to optimize)")
    b.add_argument("--b", type=float, help="t4 parameter b")
    b.add_argument("--b0", type=float, help="t6 parameter (omit to optimize)")
    b.add_argument("--b-neg", type=float, dest="b_neg", help="t7 share of -1 coordinates")
    b.add_argument("--b-pos", type=float, dest="b_pos", help="t7 share of +1 coordinates")
    b.add_argument("--m", type=int, help="t10 number of forbidden distances")
    b.add_argument("--r", type=int, help="t10: optimize at this r only")
    b.add_argument("--r-max", type=int, default=10, dest="r_max", help="t10: search r = 1..R (default: 10)")
    b.add_argument("--v", help="t10: evaluate at this comma-separated composition v_0,...,v_r")
    b.set_defaults(func=cmd_bound)

    t = sub.add_parser("table", parents=[common], help="regenerate a stored table")
    t.add_argument("which", choices=sorted(tables.TABLES))
    t.add_argument("--k", help="k values, e.g. 5..20 or 5,10,100 (default: the stored rows)")
    t.add_argument("--m", help="table 6.6: m values (default: 1)")
    t.add_argument("--r-max", type=int, default=10, dest="r_max", help="table 6.6: largest r searched (default: 10)")
    t.add_argument("--diff", metavar="GOLDEN", help="compare with a golden CSV ('golden' = the shipped file)")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run a desk-scale verification suite")
    v.add_argument("suite", choices=sorted(verify.SUITES))
    for flag, typ in (("n", int), ("n-min", int), ("b", int), ("a", int), ("k", int), ("p", int),
                      ("weight", int), ("sets", int), ("random-tuples", int), ("n-max", int),
                      ("alpha-n-max", int), ("product", int), ("q", float), ("l", int),
                      ("k-clique", int), ("trials", int), ("random-sets", int)):
        v.add_argument(f"--{flag}", type=typ, dest=flag.replace("-", "_"))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    if args.workers is None:
        try:
            args.workers = tables.default_workers()
        except ValueError as exc:
            print(f"distbounds: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.workers < 1:
        print("distbounds: error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"distbounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphTooLargeError as exc:
        print(f"distbounds: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    raise SystemExit(main())
