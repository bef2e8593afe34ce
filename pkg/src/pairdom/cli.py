"""Command-line front end.

Sources accepted by every graph-consuming command:

* a path to a graph6 file (one graph per line),
* a path to an edge-list file ("n m" header, then "u v" lines),
* a family spec string: K2, C3, C5, mK2:3, star:t=3,d=1, union:K2*2+C5*1,
* enum:N for all non-isomorphic graphs on N <= 9 vertices
  (enum:N:labeled for the labeled universe, N <= 7).

Exit status: 0 when everything holds or is not applicable, 1 when a check
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .harness import ALL_CHECK_IDS, RunConfig, RunReport, run


def _add_common(sub):
    sub.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub.add_argument("--output", default=None, help="report path (default stdout)")
    sub.add_argument("--format", dest="fmt", choices=("json", "text"),
                     default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairdom",
        description="Exact upper (paired) domination toolkit for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="compute the four invariants")
    p.add_argument("source")
    _add_common(p)

    p = sub.add_parser("classify", help="class flags and family recognition")
    p.add_argument("source")
    _add_common(p)

    p = sub.add_parser("decide", help="decide the 2x-equality per graph")
    p.add_argument("source")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--fastpath", action="store_const", dest="mode",
                       const="fastpath")
    group.add_argument("--brute", action="store_const", dest="mode",
                       const="brute")
    group.add_argument("--both", action="store_const", dest="mode",
                       const="both")
    p.set_defaults(mode="both")
    _add_common(p)

    p = sub.add_parser("verify", help="run lemma/theorem checks over a stream")
    p.add_argument("source")
    p.add_argument("--checks", default="all",
                   help="comma-separated check ids, or 'all'")
    _add_common(p)

    p = sub.add_parser("hunt", help="triangle-free counterexample hunt")
    p.add_argument("source")
    _add_common(p)

    p = sub.add_parser("gen", help="emit a named family graph")
    p.add_argument("source", metavar="family-spec")
    _add_common(p)

    return parser


def _format_text(report: RunReport) -> str:
    lines = []
    for cid, totals in report.totals.items():
        t = totals.to_record()
        lines.append(
            f"{cid}: scanned={t['scanned']} holds={t['holds']} "
            f"fails={t['fails']} na={t['na']} skipped={t['skipped']}"
        )
    for rec in report.failures:
        lines.append(f"FAIL {rec.get('check_id', '-')} {rec.get('graph6', '-')}")
    for rec in report.results:
        lines.append(json.dumps(rec))
    if report.hunt is not None:
        h = report.hunt
        lines.append(
            f"hunt: scanned={h['scanned']} skipped={h['skipped']} "
            f"satisfiers={h['satisfier_count']} exceptions={h['exception_count']}"
        )
        for rec in h["satisfiers"]:
            lines.append(f"satisfier {rec['graph6']} family={rec['family']} "
                         f"cactus={rec['cactus']}")
        for rec in h["exceptions"]:
            lines.append(f"EXCEPTION {rec['graph6']}")
    for err in report.errors:
        lines.append(f"error: {err}")
    lines.append(f"elapsed_ms={report.elapsed_ms}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    checks: tuple[str, ...] = ()
    if getattr(args, "checks", None):
        if args.checks != "all":
            checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
            unknown = [c for c in checks if c not in ALL_CHECK_IDS]
            if unknown:
                print(f"unknown checks: {', '.join(unknown)}", file=sys.stderr)
                return 2
    config = RunConfig(
        command=args.command,
        source=args.source,
        checks=checks,
        mode=getattr(args, "mode", "both"),
        jobs=args.jobs,
        output=args.output,
        fmt=args.fmt,
    )
    report, code = run(config)
    text = (
        json.dumps(report.to_record(), indent=2) + "\n"
        if config.fmt == "json"
        else _format_text(report)
    )
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
