"""Command-line driver: ``geomred {verify,construct-chi,stats,export}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .chi import ChiConstructionError, verify_chi
from .field import FieldError, prime_power
from .geometries import (build_Tstar_D, build_X, build_Y, format_incidence, geometry_stats,
                         y_setup)
from .isomorphism import (CONSTRUCTIONS, MAX_FIELD_ORDER, build_chi, check_budget, chi_summary,
                          make_context, verify_isomorphism)
from .projective import DEFAULT_BUDGET, BudgetExceeded
from .reduction import ReductionMap
from .subgeometry import canonical_subgeometry

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_budget() -> int:
    raw = os.environ.get("GEOMRED_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"GEOMRED_BUDGET must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--q", type=int, required=True)
    common.add_argument("--s", type=int, required=True)
    common.add_argument("--t", type=int, required=True)
    common.add_argument("--construction", choices=CONSTRUCTIONS, default="both")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--out", default=None,
                        help="output file (a directory for export); stdout if omitted")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = _Parser(prog="geomred", description="Field-reduction geometry verifier.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("verify", parents=[common], help="certify that phi maps Y(s,t,q) onto X(s,t,q)")
    sub.add_parser("construct-chi", parents=[common], help="build and check chi")
    sub.add_parser("stats", parents=[common], help="parameters of X, Y and T*(D)")
    sub.add_parser("export", parents=[common], help="write X and Y as incidence files")
    return parser


def validate(args):
    try:
        prime_power(args.q)
    except (FieldError, ValueError):
        raise UsageError(f"q = {args.q} is not a prime power")
    if args.s < 0:
        raise UsageError("s must be >= 0")
    if args.t < 1:
        raise UsageError("t must be >= 1")
    if args.budget is None:
        args.budget = default_budget()
    if args.budget <= 0:
        raise UsageError("budget must be positive")


def emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def as_text(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(as_text(v, indent + 1).rstrip("\n"))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    cert = verify_isomorphism(args.q, args.s, args.t, args.construction, args.seed, args.budget)
    if args.format == "json":
        emit(cert.to_json(), args.out)
    else:
        rows = [f"q={args.q} s={args.s} t={args.t} construction={args.construction}"]
        rows += [f"{'PASS' if c.passed else 'FAIL'} {c.name} ({c.count})" for c in cert.checks]
        rows += [f"{k}: {v}" for k, v in sorted(cert.counts.items())]
        emit("\n".join(rows) + "\n", args.out)
    for c in cert.failed():
        print(f"check failed: {c.name}", file=sys.stderr)
        for w in c.witnesses:
            print(f"  witness: {json.dumps(w, sort_keys=True)}", file=sys.stderr)
    return EXIT_OK if cert.ok else EXIT_FAIL


def cmd_construct_chi(args) -> int:
    q, s, t = args.q, args.s, args.t
    if q ** (s + 1) > MAX_FIELD_ORDER:
        raise BudgetExceeded("big field order", q ** (s + 1), MAX_FIELD_ORDER)
    m = ReductionMap(q, s, t - 1)
    C = canonical_subgeometry(m.emb, t - 1, t - 1)
    tags = ["inductive", "algebraic"] if args.construction == "both" else [args.construction]
    report, ok = {"params": {"q": q, "s": s, "t": t}, "constructions": []}, True
    for tag in tags:
        try:
            res = build_chi(C, m, tag)
        except ChiConstructionError as exc:
            ok = False
            report["constructions"].append({"tag": tag, "error": str(exc), "trace": exc.trace})
            print(f"{tag}: {exc}", file=sys.stderr)
            continue
        rep = verify_chi(res.chi, C, m)
        ok = ok and rep.ok and res.chi.pdim == s * t - 1
        entry = chi_summary(res)
        entry["trace"] = res.trace
        entry["points"] = [{"point": list(Q), "meet_pdim": d, "pass": good} for Q, d, good in rep.rows]
        entry["passed"] = f"{rep.passed}/{len(rep.rows)}"
        report["constructions"].append(entry)
    if args.format == "json":
        emit(json.dumps(report, sort_keys=True, indent=1) + "\n", args.out)
    else:
        rows = []
        for e in report["constructions"]:
            if "error" in e:
                rows.append(f"{e['tag']}: ERROR {e['error']}")
                continue
            rows.append(f"{e['tag']}: chi pdim {e['pdim']}, {e['passed']} point checks pass")
            rows += ["  " + " ".join(map(str, r)) for r in e["basis"]]
        emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


def _geometries(args):
    check_budget(args.q, args.s, args.t, args.budget)
    sigma, C = y_setup(args.s, args.t, args.q)
    tag = "inductive" if args.construction == "both" else args.construction
    ctx = make_context(args.q, args.s, args.t, tag, sigma, C)
    X = build_X(args.s, args.t, args.q, ctx.pi, args.budget)
    Y = build_Y(args.s, args.t, args.q, sigma, C)
    return X, Y


def cmd_stats(args) -> int:
    X, Y = _geometries(args)
    T = build_Tstar_D(args.s, args.t, args.q)
    stats = {k: geometry_stats(G) for k, G in (("X", X), ("Y", Y), ("Tstar", T))}
    same = stats["X"] == stats["Y"] == stats["Tstar"]
    report = {"params": {"q": args.q, "s": args.s, "t": args.t},
              **{k: v.as_dict() for k, v in stats.items()},
              "points_equal": len(X.points) == len(Y.points),
              "records_coincide": same}
    if args.format == "json":
        emit(json.dumps(report, sort_keys=True, indent=1) + "\n", args.out)
    else:
        text = as_text(report)
        text += f"|P_X| = |P_Y| = {len(X.points)}\n" if report["points_equal"] else \
            f"|P_X| = {len(X.points)} != |P_Y| = {len(Y.points)}\n"
        emit(text, args.out)
    return EXIT_OK if same else EXIT_FAIL


def cmd_export(args) -> int:
    X, Y = _geometries(args)
    stem = f"s{args.s}_t{args.t}_q{args.q}"
    if args.out is None:
        sys.stdout.write(format_incidence(X) + format_incidence(Y))
        return EXIT_OK
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for G in (X, Y):
        (out / f"{G.meta['kind']}_{stem}.txt").write_text(format_incidence(G))
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "construct-chi": cmd_construct_chi,
            "stats": cmd_stats, "export": cmd_export}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        validate(args)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"geomred: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"geomred: budget exceeded: {exc}", file=sys.stderr)
        print("projected counts:", file=sys.stderr)
        for k, v in exc.counts.items():
            print(f"  {k}: {v}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
