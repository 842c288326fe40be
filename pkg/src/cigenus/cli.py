"""Command-line interface: ``cigenus {compute,table,verify}``.

Exit codes: 0 success, 1 verification or internal failure, 2 usage error.
Rationals are always written as strings ``p/q`` (or ``p``).

Custom genus files (``--genus custom --custom FILE``): the first non-comment
line is ``name: <string>``, then one rational q_i per line (q_1 first) for
Q(x) = 1 + q_1 x + q_2 x^2 + ...; ``#`` starts a comment.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from typing import Sequence

from . import closed
from .genus import Genus, genus_from_name
from .oracle import genus_value_oracle
from .rational import format_rational, parse_rational
from .residue import genus_value
from .series import TruncationError
from .space import Space
from .verify import SweepConfig, run_verify, sweep_spaces

GENUS_NAMES = ("todd", "ahat", "signature", "euler", "ty", "ak", "alpha", "custom")
CSV_HEADER = ["n", "degrees", "c1", "spin", "genus", "value"]


class UsageError(Exception):
    pass


def parse_degrees(text: str | None) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        degrees = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"degrees must be a comma-separated list of integers, got {text!r}") from None
    if any(d < 1 for d in degrees):
        raise UsageError(f"degrees must be positive, got {text!r}")
    return degrees


def parse_dimension_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"dimension must be an integer or a range a..b, got {text!r}") from None
    if a < 0 or b < a:
        raise UsageError(f"bad dimension range {text!r}")
    return range(a, b + 1)


def _genus_args(args, name: str) -> Genus:
    y = None
    if args.y is not None:
        try:
            y = parse_rational(args.y)
        except ValueError as exc:
            raise UsageError(f"--y: {exc}") from None
    try:
        return genus_from_name(name, y=y, k=args.k, custom_file=args.custom)
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None


def _value(sp: Space, g: Genus, method: str):
    if method == "residue":
        return genus_value(sp, g)
    if method == "oracle":
        return genus_value_oracle(sp, g)
    if g.kind == "todd":
        return closed.todd_t2(sp)
    if g.kind == "ahat":
        return closed.ahat_closed(sp)
    if g.kind == "euler":
        return closed.euler_closed(sp)
    if g.kind == "ak":
        return closed.ak_closed(sp, g.k)
    raise UsageError(f"no closed form for genus {g.label}")


def cmd_compute(args, out) -> int:
    if len(parse_dimension_range(args.dimension)) != 1:
        raise UsageError("compute takes a single dimension")
    sp = Space(int(args.dimension), parse_degrees(args.degrees))
    record = {"dimension": sp.n, "degrees": list(sp.degrees), "genus": args.genus}
    if args.genus == "alpha":
        if not sp.spin:
            raise UsageError(f"{sp} is not spin (c1 = {sp.c1})")
        alpha = closed.alpha_invariant(sp)
        record.update(params={}, c1=sp.c1, spin=sp.spin, value=format_rational(alpha.value),
                      alpha_kind=alpha.kind, method="closed")
    else:
        g = _genus_args(args, args.genus)
        record.update(params=g.params, c1=sp.c1, spin=sp.spin,
                      value=format_rational(_value(sp, g, args.method)), method=args.method)
        if g.kind != args.genus:
            record["normalized_genus"] = g.kind
    out.write(json.dumps(record) + "\n")
    return 0


def cmd_table(args, out) -> int:
    names = [tok.strip() for spec in args.genus for tok in spec.split(",") if tok.strip()]
    if not names:
        raise UsageError("empty genus list")
    for name in names:
        if name not in GENUS_NAMES or name == "alpha":
            raise UsageError(f"genus {name!r} cannot be tabulated")
    if args.dmax < 1 or args.rmax < 0:
        raise UsageError("need --dmax >= 1 and --rmax >= 0")
    genera = [(name, _genus_args(args, name)) for name in names]
    dims = parse_dimension_range(args.dimension)
    rows = []
    for sp in sweep_spaces(dims.stop - 1, args.dmax, args.rmax, nmin=dims.start):
        for name, g in genera:
            rows.append((sp, name, format_rational(_value(sp, g, args.method))))
    rows.sort(key=lambda row: (row[0].n, row[0].degrees, row[1]))

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for sp, name, value in rows:
            writer.writerow([sp.n, ",".join(map(str, sp.degrees)), sp.c1, str(sp.spin).lower(), name, value])
        out.write(buf.getvalue())
    else:
        records = [
            {"n": sp.n, "degrees": list(sp.degrees), "c1": sp.c1, "spin": sp.spin, "genus": name, "value": value}
            for sp, name, value in rows
        ]
        if args.format == "json":
            out.write(json.dumps(records) + "\n")
        else:
            for rec in records:
                out.write(json.dumps(rec) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.nmax < 0 or args.dmax < 1 or args.rmax < 0 or args.jobs < 1:
        raise UsageError("need --nmax >= 0, --dmax >= 1, --rmax >= 0, --jobs >= 1")
    if args.only and args.all:
        raise UsageError("--only and --all are mutually exclusive")
    cfg = SweepConfig(nmax=args.nmax, dmax=args.dmax, rmax=args.rmax, seed=args.seed)
    try:
        reports = run_verify(cfg, args.only or None, jobs=args.jobs)
    except ValueError as exc:
        if "unknown identity" in str(exc):
            raise UsageError(str(exc)) from None
        raise
    failures = [rep for rep in reports if not rep.passed]
    for rep in reports if args.format == "jsonl" else failures:
        if args.format == "jsonl":
            out.write(json.dumps(rep.to_dict(), ensure_ascii=False) + "\n")
        else:
            out.write(f"FAIL {rep.identity} {rep.instance}: {rep.lhs} != {rep.rhs}\n")
    per_identity = Counter(rep.identity for rep in reports)
    failed = Counter(rep.identity for rep in failures)
    summary = ", ".join(f"{name} {per_identity[name] - failed[name]}/{per_identity[name]}" for name in per_identity)
    status = "PASS" if not failures else "FAIL"
    print(f"{status}: {len(reports) - len(failures)}/{len(reports)} checks passed ({summary})", file=sys.stderr)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cigenus",
        description="Exact Hirzebruch genera of complete intersections X_n(d_1,...,d_r).",
        epilog=__doc__.split("\n\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def genus_params(p):
        p.add_argument("--y", help="rational y for the T_y genus")
        p.add_argument("--k", type=int, help="positive integer k for the A_k genus")
        p.add_argument("--custom", metavar="FILE", help="custom genus file")
        p.add_argument("--method", choices=("residue", "closed", "oracle"), default="residue")

    p = sub.add_parser("compute", help="genus of a single complete intersection (JSON)")
    p.add_argument("-n", "--dimension", required=True)
    p.add_argument("-d", "--degrees", default="")
    p.add_argument("--genus", required=True, choices=GENUS_NAMES)
    genus_params(p)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("table", help="tabulate genera over a range of complete intersections")
    p.add_argument("-n", "--dimension", required=True, help="integer or range a..b")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--genus", action="append", required=True, help="comma-separated genus names (repeatable)")
    genus_params(p)
    p.add_argument("--format", choices=("csv", "jsonl", "json"), default="csv")

    p = sub.add_parser("verify", help="run identity sweeps; exit 0 iff all checks pass")
    p.add_argument("--nmax", type=int, default=SweepConfig.nmax)
    p.add_argument("--dmax", type=int, default=SweepConfig.dmax)
    p.add_argument("--rmax", type=int, default=SweepConfig.rmax)
    p.add_argument("--only", action="append", metavar="IDENTITY", help="run only this identity (repeatable)")
    p.add_argument("--all", action="store_true", help="run every identity (the default)")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"compute": cmd_compute, "table": cmd_table, "verify": cmd_verify}[args.command]
    try:
        return handler(args, sys.stdout)
    except UsageError as exc:
        print(f"cigenus: error: {exc}", file=sys.stderr)
        return 2
    except TruncationError as exc:
        print(f"cigenus: internal error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # input-dependent preconditions (not spin, custom series too short, ...)
        print(f"cigenus: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
