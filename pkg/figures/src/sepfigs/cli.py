"""Standalone figure renderer: ``sepfig FIGURE_ID --csv data.csv --out fig.png``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import render
from .schemas import SchemaError
from .specs import FIGURES


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepfig",
        description="Render an entrosep survey CSV into one of the ten reference figures.",
    )
    parser.add_argument("figure_id", type=int, choices=sorted(FIGURES),
                        help="figure number (1-10)")
    parser.add_argument("--csv", type=Path, action="append", required=True,
                        help="input CSV path (matching the figure's schema)")
    parser.add_argument("--out", type=Path, required=True, help="output image path")
    return parser


def parse_and_dispatch(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        render(args.figure_id, args.csv, args.out)
    except (SchemaError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(f"figure {args.figure_id} -> {args.out}")
    return 0


def main() -> None:
    sys.exit(parse_and_dispatch())


if __name__ == "__main__":
    main()
