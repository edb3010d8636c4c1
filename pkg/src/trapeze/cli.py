"""Command line interface.

Exit codes: 0 on success, 1 when a verification run finds violations,
2 on usage, parse, or bounds errors.
"""

import argparse
import json
import os
import sys

from .analysis import analyze, render_table
from .complexity import complexity_profile
from .enumeration import EnumerationSpec, census, census_csv, verify_theorems
from .errors import TrapezeError


def _default_jobs():
    env = os.environ.get("TRAPEZE_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="trapeze",
        description="generalized trapezoidal word analysis")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full analysis of words")
    a.add_argument("words", nargs="*", help="words over a-z")
    a.add_argument("--stdin", action="store_true",
                   help="also read words from stdin, one per line")
    a.add_argument("--format", choices=("table", "json"), default="table")

    g = sub.add_parser("graph", help="complexity profile as CSV")
    g.add_argument("word")
    g.add_argument("--ascii", action="store_true",
                   help="append an ascii bar chart")

    def range_args(sp):
        sp.add_argument("-k", "--alphabet-size", type=int, required=True)
        sp.add_argument("-n", "--max-length", type=int, required=True)
        sp.add_argument("--jobs", type=int, default=_default_jobs())
        sp.add_argument("--full", action="store_true",
                        help="every word, not one per renaming class")

    v = sub.add_parser("verify", help="run the invariant battery")
    range_args(v)

    c = sub.add_parser("census", help="per-length counts as CSV")
    range_args(c)

    s = sub.add_parser("serve", help="run the HTTP service")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=8000)

    return p


def _cmd_analyze(args) -> int:
    words = list(args.words)
    if args.stdin:
        words.extend(line.strip() for line in sys.stdin if line.strip())
    if not words:
        print("analyze: no words given (pass words or --stdin)",
              file=sys.stderr)
        return 2
    records = [analyze(w) for w in words]
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in records], indent=2))
    else:
        print("\n\n".join(render_table(r) for r in records))
    return 0


def _cmd_graph(args) -> int:
    prof = complexity_profile(args.word)
    lines = ["n,C(n)"]
    lines.extend(f"{i},{c}" for i, c in enumerate(prof.values))
    if args.ascii:
        lines.append("")
        width = len(str(len(prof.values) - 1))
        lines.extend(f"{i:>{width}} " + "#" * c
                     for i, c in enumerate(prof.values))
    print("\n".join(lines))
    return 0


def _cmd_verify(args) -> int:
    spec = EnumerationSpec(args.alphabet_size, args.max_length,
                           canonical=not args.full)
    report = verify_theorems(spec, jobs=args.jobs)
    print(report.to_json())
    return 0 if report.ok else 1


def _cmd_census(args) -> int:
    spec = EnumerationSpec(args.alphabet_size, args.max_length,
                           canonical=not args.full)
    rows = census(spec, jobs=args.jobs)
    sys.stdout.write(census_csv(rows))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "graph": _cmd_graph,
    "verify": _cmd_verify,
    "census": _cmd_census,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TrapezeError as exc:
        print(f"trapeze: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
