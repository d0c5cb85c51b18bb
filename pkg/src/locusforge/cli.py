"""Command-line front door: locus, trace, fit, prove, serve.

Exit codes: 0 success, 2 validation error, 3 cancelled/timeout,
4 locus computed but degenerate.  Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import Cancelled, LocusForgeError
from .jobs import DEFAULT_DEADLINE_MS, canonical_json, run_fit, run_locus, run_prove, run_trace

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CANCELLED = 3
EXIT_DEGENERATE = 4


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise LocusForgeError(f"cannot read {path}: {exc}") from exc


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read_file(path))
    except json.JSONDecodeError as exc:
        raise LocusForgeError(f"{path} is not valid JSON: {exc}") from exc


def cmd_locus(args) -> int:
    result = run_locus(_load_json(args.spec), args.deadline_ms)
    print(canonical_json(result))
    return EXIT_DEGENERATE if result["degenerate"] else EXIT_OK


def cmd_trace(args) -> int:
    payload = {"spec": _load_json(args.spec), "samples": args.samples,
               "branches": args.branches}
    result = run_trace(payload)
    sys.stdout.write(result["csv"])
    return EXIT_OK


def cmd_fit(args) -> int:
    from .fit import parse_points

    points = parse_points(_read_file(args.points), args.mode)
    payload = {"degree": args.degree, "mode": args.mode,
               "points": [[str(px), str(py)] for px, py in points]}
    result = run_fit(payload)
    print(canonical_json(result) if args.json else result["polynomial"]["string"])
    return EXIT_OK


def cmd_prove(args) -> int:
    lines = _read_file(args.hypotheses).splitlines()
    hypotheses = [ln.strip() for ln in lines
                  if ln.strip() and not ln.strip().startswith("#")]
    payload = {"hypotheses": hypotheses, "thesis": args.thesis}
    result = run_prove(payload, args.deadline_ms)
    print(canonical_json(result) if args.json else result["verdict"])
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import serve

    serve(host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locusforge",
        description="Exact locus equations, traces, curve fits and proofs "
                    "for planar 4-bar linkages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("locus", help="derive the symbolic locus equation")
    p.add_argument("--spec", required=True, help="linkage spec JSON file")
    p.add_argument("--deadline-ms", type=int, default=DEFAULT_DEADLINE_MS)
    p.set_defaults(func=cmd_locus)

    p = sub.add_parser("trace", help="numeric trace as CSV")
    p.add_argument("--spec", required=True, help="linkage spec JSON file")
    p.add_argument("--samples", type=int, default=360)
    p.add_argument("--branches", choices=["both", "ccw", "cw"], default="both")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("fit", help="fit an implicit curve through points")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--points", required=True, help="file of x,y rows")
    p.add_argument("--mode", choices=["exact", "leastsq"], default="exact")
    p.add_argument("--json", action="store_true", help="print the full result JSON")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("prove", help="prove a statement by ideal membership")
    p.add_argument("--hypotheses", required=True,
                   help="file with one polynomial expression per line")
    p.add_argument("--thesis", required=True, help="polynomial expression")
    p.add_argument("--deadline-ms", type=int, default=DEFAULT_DEADLINE_MS)
    p.add_argument("--json", action="store_true", help="print the full result JSON")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None,
                   help="default: $LOCUSFORGE_PORT or 8765")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_VALIDATION
    try:
        return args.func(args)
    except Cancelled as exc:
        print(f"cancelled: {exc}", file=sys.stderr)
        return EXIT_CANCELLED
    except LocusForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
