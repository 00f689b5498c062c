"""smindy: command-line front end."""
from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys

from .bijections import theta_target, verify_theorem_a, verify_theorem_b, verify_theta
from .homs import HomEngine, parse_object
from .kronecker import verify_example
from .orbit import OrbitCategory
from .orthogonal import BudgetExceeded, enumerate_smc_in_fd, enumerate_sms
from .perp import verify_reduction
from .quiver import QuiverError, dynkin_quiver, parse_quiver
from .weyl import WeylGroup

CSV_HELP = """\
CSV columns (stable; table output is for humans only):
  roots               index,root,projective,injective
  hom                 x,y,w,dim            (w empty for derived Hom)
  fd                  index,object
  enumerate           index,members        (members ';'-separated; NC parts '|'-separated,
                                            each part a product of reflections t(root))
  verify / kronecker  theorem,quiver,w,pass,counts   (counts as compact JSON)
"""

_DYNKIN_NAME = re.compile(r"^[ADE]\d+$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(2)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def load_quiver(source: str):
    """A file path, '-' for stdin, a Dynkin name such as 'D4', or inline quiver text."""
    if source == "-":
        return parse_quiver(sys.stdin.read())
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_quiver(fh.read())
    if _DYNKIN_NAME.match(source):
        return dynkin_quiver(source)
    return parse_quiver(source)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--quiver", metavar="PATH|-|TEXT",
                        help="quiver file, '-' for stdin, a Dynkin name (A3, D4, E6) or inline text")
    common.add_argument("--w", type=_positive, default=1, help="the w in C_{-w} (default 1)")
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--budget", type=_positive, default=None,
                        help="max candidate subsets per search (default $SMINDY_BUDGET or 1e8)")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized choices")
    common.add_argument("--timing", action="store_true", help="fill elapsed_ms in reports")

    parser = _Parser(prog="smindy", description="Simple-minded collections and systems for Dynkin quivers.",
                     epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    kw = dict(parents=[common], epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub.add_parser("roots", help="list the positive roots", **kw)
    p = sub.add_parser("hom", help="dim Hom between two objects (orbit Hom with --orbit)", **kw)
    p.add_argument("--x", required=True, help="object literal like '(1,0)@0'")
    p.add_argument("--y", required=True)
    p.add_argument("--orbit", action="store_true", help="compute Hom in C_{-w} instead of D^b")
    sub.add_parser("fd", help="list the fundamental domain of C_{-w}", **kw)
    p = sub.add_parser("enumerate", help="enumerate collections", **kw)
    p.add_argument("kind", choices=("smc", "sms", "nc", "nc-positive", "theta-target"))
    p = sub.add_parser("verify", help="run a verification driver", **kw)
    p.add_argument("what", choices=("theorem-a", "theorem-b", "theta", "reduction"))
    p.add_argument("--t", action="append", default=[], metavar="OBJ",
                   help="reduction generator (repeatable), e.g. '(1,0)@0'")
    p.add_argument("--full-count", action="store_true",
                   help="theorem-b: also compare all NC tuples with SMCs in degrees 0..w")
    p = sub.add_parser("kronecker-example", help="the Kronecker 1-Riedtmann example", **kw)
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated tube labels")
    p.add_argument("--omega", required=True, help="comma-separated tube labels")
    p.add_argument("--window", type=_positive, default=4, help="range of F-powers summed")
    return parser


# -- output ------------------------------------------------------------------

def _emit_rows(fmt: str, header: list[str], rows: list[list], payload, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        widths = [max(len(str(v)) for v in col) for col in zip(header, *rows)] if rows else [len(h) for h in header]
        for line in [header] + rows:
            out.write("  ".join(str(v).ljust(wd) for v, wd in zip(line, widths)).rstrip() + "\n")


def _emit_report(fmt: str, report, out) -> None:
    d = report.to_dict()
    if fmt == "json":
        out.write(report.to_json() + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["theorem", "quiver", "w", "pass", "counts"])
        writer.writerow([d["theorem"], d["quiver"], d["w"], str(d["pass"]).lower(),
                         json.dumps(d["counts"], sort_keys=True, separators=(",", ":"))])
    else:
        out.write(f"{d['theorem']} on {d['quiver']}, w={d['w']}: {'PASS' if d['pass'] else 'FAIL'}\n")
        for k in sorted(d["counts"]):
            out.write(f"  {k}: {d['counts'][k]}\n")
        if d["witness"]:
            out.write("  witness: " + json.dumps(d["witness"], sort_keys=True) + "\n")


def _nc_part(group: WeylGroup, u) -> str:
    roots = group.t_reduced_expression(u)
    return "".join(f"t({','.join(map(str, r))})" for r in roots) or "e"


# -- commands ----------------------------------------------------------------

def _need_quiver(args):
    if not args.quiver:
        raise UsageError("--quiver is required for this command")
    return load_quiver(args.quiver)


def run(args, out) -> int:
    if args.command == "kronecker-example":
        lam = [s.strip() for s in args.lam.split(",") if s.strip()]
        omega = [s.strip() for s in args.omega.split(",") if s.strip()]
        report = verify_example(lam, omega, args.window, timing=args.timing)
        _emit_report(args.format, report, out)
        return 0 if report.passed else 1

    q = _need_quiver(args)
    if args.command == "roots":
        eng = HomEngine(q)
        flags = [(eng.is_projective(r), eng.is_injective(r)) for r in eng.roots]
        payload = {"quiver": q.type_name,
                   "roots": [{"root": list(r), "projective": p, "injective": j}
                             for r, (p, j) in zip(eng.roots, flags)]}
        rows = [[i + 1, "(" + ",".join(map(str, r)) + ")", str(p).lower(), str(j).lower()]
                for i, (r, (p, j)) in enumerate(zip(eng.roots, flags))]
        _emit_rows(args.format, ["index", "root", "projective", "injective"], rows, payload, out)
        return 0

    if args.command == "hom":
        eng = HomEngine(q)
        x, y = parse_object(args.x), parse_object(args.y)
        eng.check_root(x.root)
        eng.check_root(y.root)
        w = args.w if args.orbit else None
        dim = OrbitCategory(eng, args.w).hom(x, y) if args.orbit else eng.hom(x, y)
        if args.format == "table":
            out.write(f"{dim}\n")
        else:
            _emit_rows(args.format, ["x", "y", "w", "dim"], [[str(x), str(y), "" if w is None else w, dim]],
                       {"x": str(x), "y": str(y), "w": w, "dim": dim}, out)
        return 0

    if args.command == "fd":
        cat = OrbitCategory(q, args.w)
        rows = [[i + 1, str(d)] for i, d in enumerate(cat.objects)]
        _emit_rows(args.format, ["index", "object"], rows,
                   {"quiver": q.type_name, "w": args.w, "objects": [str(d) for d in cat.objects]}, out)
        return 0

    if args.command == "enumerate":
        if args.kind in ("nc", "nc-positive"):
            group = WeylGroup(q)
            tuples = group.nc_tuples(args.w) if args.kind == "nc" else group.positive_nc_tuples(args.w)
            items = sorted("|".join(_nc_part(group, u) for u in t) for t in tuples)
            members = [[s] for s in items]
        else:
            eng = HomEngine(q)
            if args.kind == "smc":
                found = enumerate_smc_in_fd(eng, args.w, args.budget, args.jobs)
            elif args.kind == "sms":
                found = enumerate_sms(eng, args.w, args.budget, args.jobs)
            else:
                found = theta_target(eng, args.w)
            members = [[str(x) for x in c] for c in found]
        rows = [[i + 1, ";".join(m)] for i, m in enumerate(members)]
        _emit_rows(args.format, ["index", "members"], rows,
                   {"quiver": q.type_name, "w": args.w, "kind": args.kind, "count": len(members),
                    "collections": members}, out)
        return 0

    if args.command == "verify":
        if args.what == "theorem-a":
            report = verify_theorem_a(q, args.w, args.budget, args.jobs, args.timing)
        elif args.what == "theorem-b":
            report = verify_theorem_b(q, args.w, args.budget, args.jobs, args.seed, args.timing,
                                      full_count=args.full_count)
        elif args.what == "theta":
            report = verify_theta(q, args.w, args.budget, args.jobs, args.timing)
        else:
            if not args.t:
                raise UsageError("verify reduction needs at least one --t generator")
            eng = HomEngine(q)
            gens = [parse_object(t) for t in args.t]
            for g in gens:
                eng.check_root(g.root)
            report = verify_reduction(eng, gens, args.w, args.budget, args.timing)
        _emit_report(args.format, report, out)
        return 0 if report.passed else 1

    raise UsageError(f"unknown command {args.command}")  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, sys.stdout)
    except (UsageError, QuiverError, BudgetExceeded, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
