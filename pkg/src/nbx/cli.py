"""Command-line interface.

Subcommands: construct, verify, bounds, table, search, mkd, convert,
audit, reduce.  Families travel as ".nbx" text (one string per line, '#'
comments, blank lines ignored) on files or stdin/stdout; structured
results are JSON, tables default to TSV when piped and an aligned layout
on a terminal.

Exit status: 0 on success, 1 when `verify` finds violations, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import biclique, bounds, constructions, families, search


def _thread_count() -> int:
    """Worker threads for grid computations, from NBX_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("NBX_THREADS", "1")))
    except ValueError:
        return 1


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_family(path: str) -> families.Family:
    return families.Family.from_nbx(_read_text(path))


def _emit_family(fam: families.Family) -> None:
    sys.stdout.write(fam.to_nbx())


def _emit_json(data) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _rows_out(rows: list[list[str]], header: list[str], fmt: str) -> None:
    if fmt == "tsv":
        sys.stdout.write("\t".join(header) + "\n")
        for row in rows:
            sys.stdout.write("\t".join(row) + "\n")
        return
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    sys.stdout.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for row in rows:
        sys.stdout.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _table_format(args) -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "tsv", False):
        return "tsv"
    return "human" if sys.stdout.isatty() else "tsv"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbx", description="Neighborly families of boxes: construct, verify, bound, solve."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="emit a constructed family as .nbx")
    consub = con.add_subparsers(dest="kind", required=True)
    p = consub.add_parser("canonical", help="chain family of size d+1")
    p.add_argument("d", type=int)
    p = consub.add_parser("ball", help="Hamming ball family for (k, d)")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p = consub.add_parser("extremal", help="maximum (d-1)-neighborly family")
    p.add_argument("d", type=int)
    p = consub.add_parser("mbar", help="best fragmented-product family for (k, d)")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p = consub.add_parser("fragmented", help="fragmented construction for a block plan")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--m", type=int, default=None, help="block count (default: optimal plan)")
    p.add_argument("--a", type=str, default=None, help="comma-separated block lengths")
    p = consub.add_parser("product", help="concatenation product of two .nbx files")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("verify", help="check a family for k-neighborliness")
    p.add_argument("file", help=".nbx file or - for stdin")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("bounds", help="best lower/upper bounds for one (k, d)")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true")

    p = sub.add_parser("table", help="bounds grid over 1 <= k <= min(d, kmax), d <= dmax")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true")

    p = sub.add_parser("search", help="exact maximum family search")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--no-joker-prune", action="store_true")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--deterministic", action="store_true")
    p.add_argument("--enumerate", dest="enumerate_all", action="store_true",
                   help="list every maximum family")
    p.add_argument("--force", action="store_true", help="lift the candidate-count capacity")

    p = sub.add_parser("mkd", help="fragmented-construction optimum m(k, d)")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--mbar", action="store_true", help="optimize over splits of (k, d)")

    p = sub.add_parser("convert", help="convert between .nbx and biclique-cover JSON")
    convsub = p.add_subparsers(dest="direction", required=True)
    q = convsub.add_parser("to-cover")
    q.add_argument("file", help=".nbx file or - for stdin")
    q = convsub.add_parser("to-family")
    q.add_argument("file", help="cover JSON file or - for stdin")

    p = sub.add_parser("audit", help="triangle-inequality audit of the bounds grid")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true")

    p = sub.add_parser("reduce", help="twin-merge a partition down to the all-joker string")
    p.add_argument("file", help=".nbx file or - for stdin")

    return parser


def _cmd_construct(args) -> int:
    if args.kind == "canonical":
        _emit_family(constructions.canonical(args.d))
    elif args.kind == "ball":
        _emit_family(constructions.ball_family(args.k, args.d))
    elif args.kind == "extremal":
        _emit_family(constructions.extremal_dminus1(args.d))
    elif args.kind == "mbar":
        _emit_family(constructions.realize_mbar(args.k, args.d))
    elif args.kind == "fragmented":
        if args.m is None and args.a is None:
            plan = constructions.m_value(args.k, args.d).plan
        else:
            if args.m is None or args.a is None:
                raise ValueError("--m and --a must be given together")
            a = tuple(int(x) for x in args.a.split(","))
            plan = constructions.FragmentPlan(args.k, args.d, args.m, a)
        _emit_family(constructions.fragmented(plan))
    else:  # product
        left = _load_family(args.left)
        right = _load_family(args.right)
        _emit_family(constructions.product(left, right))
    return 0


def _cmd_verify(args) -> int:
    fam = _load_family(args.file)
    report = families.verify_neighborly(fam, args.k)
    _emit_json(report.as_dict())
    return 0 if report.is_valid else 1


def _entry_row(entry: bounds.BoundsEntry) -> list[str]:
    return [
        str(entry.k),
        str(entry.d),
        str(entry.lower.value),
        entry.lower.method,
        str(entry.upper.value),
        entry.upper.method,
        "yes" if entry.exact else "no",
    ]


_TABLE_HEADER = ["k", "d", "lower", "lower_method", "upper", "upper_method", "exact"]


def _cmd_bounds(args) -> int:
    entry = bounds.best_bounds(args.k, args.d)
    if _table_format(args) == "json":
        _emit_json(entry.as_dict())
    else:
        _rows_out([_entry_row(entry)], _TABLE_HEADER, "tsv" if not sys.stdout.isatty() or args.tsv else "human")
    return 0


def _cmd_table(args) -> int:
    entries = bounds.bounds_table(args.kmax, args.dmax, threads=_thread_count())
    fmt = _table_format(args)
    if fmt == "json":
        _emit_json([e.as_dict() for e in entries])
    else:
        _rows_out([_entry_row(e) for e in entries], _TABLE_HEADER, fmt)
    return 0


def _cmd_search(args) -> int:
    cfg = search.SearchConfig(
        budget_nodes=args.budget_nodes,
        budget_secs=args.budget_secs,
        joker_prune=not args.no_joker_prune,
        symmetry=not args.no_symmetry,
    )
    if args.force:
        cfg.max_candidates = 1 << 62
    if args.enumerate_all:
        fams = search.enumerate_max_families(args.k, args.d, cfg)
        _emit_json(
            {
                "k": args.k,
                "d": args.d,
                "size": len(fams[0]) if fams else 0,
                "count": len(fams),
                "families": [f.texts() for f in fams],
            }
        )
        return 0
    result = search.max_family(args.k, args.d, cfg)
    _emit_json(result.as_dict())
    return 0


def _cmd_mkd(args) -> int:
    if args.mbar:
        _emit_json(constructions.mbar_value(args.k, args.d).as_dict())
    else:
        _emit_json(constructions.m_value(args.k, args.d).as_dict())
    return 0


def _cmd_convert(args) -> int:
    if args.direction == "to-cover":
        fam = _load_family(args.file)
        _emit_json(biclique.family_to_cover(fam).as_dict())
    else:
        cover = biclique.BicliqueCover.from_dict(json.loads(_read_text(args.file)))
        _emit_family(biclique.cover_to_family(cover))
    return 0


def _cmd_audit(args) -> int:
    findings = bounds.pascal_audit(
        bounds.bounds_table(args.kmax, args.dmax, threads=_thread_count())
    )
    fmt = _table_format(args)
    if fmt == "json":
        _emit_json([f.as_dict() for f in findings])
    else:
        header = ["k", "d", "lhs", "rhs", "slack", "violated"]
        rows = [
            [str(f.k), str(f.d), str(f.lhs), str(f.rhs), str(f.slack), "yes" if f.violated else "no"]
            for f in findings
        ]
        _rows_out(rows, header, fmt)
    violated = sum(1 for f in findings if f.violated)
    if violated:
        print(f"{violated} violation(s) found", file=sys.stderr)
    return 0


def _cmd_reduce(args) -> int:
    fam = _load_family(args.file)
    trace = families.reduce_to_trivial(fam)
    for step, f in enumerate(trace):
        sys.stdout.write(f"# step {step} size {len(f)}\n")
        sys.stdout.write(f.to_nbx())
    return 0


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "table": _cmd_table,
    "search": _cmd_search,
    "mkd": _cmd_mkd,
    "convert": _cmd_convert,
    "audit": _cmd_audit,
    "reduce": _cmd_reduce,
}


def run(argv: Optional[list[str]] = None) -> int:
    """Parse and execute one command; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except search.CapacityExceeded as exc:
        print(f"error: {exc} (use --force to override)", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError, KeyError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
