"""Rendering CLI: ``mhd-plot contour`` and ``mhd-plot line``.

Exit codes: 0 success, 2 usage, 4 I/O.
"""

from __future__ import annotations

import argparse
import sys

from .errors import UsageError
from .plots import contour_plot, line_plot
from .snapshots import read_snapshot


def cmd_contour(args) -> int:
    snap = read_snapshot(args.snapshot)
    contour_plot(snap, args.component, args.levels, args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_line(args) -> int:
    paths = [p for p in args.cuts.split(",") if p.strip()]
    line_plot(paths, args.component, args.out)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mhd-plot", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("contour", help="filled contour plot of one snapshot component")
    c.add_argument("--snapshot", required=True)
    c.add_argument("--component", required=True)
    c.add_argument("--levels", type=int, default=40)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_contour)

    ln = sub.add_parser("line", help="overlay line cuts from one or more cut CSVs")
    ln.add_argument("--cuts", required=True, help="comma-separated cut CSV paths")
    ln.add_argument("--component", required=True)
    ln.add_argument("--out", required=True)
    ln.set_defaults(func=cmd_line)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
