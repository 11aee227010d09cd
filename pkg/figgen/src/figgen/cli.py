"""figgen command line: sweep CSVs in, one figure out."""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figgen", description="Render capacity-sweep CSVs into a figure"
    )
    parser.add_argument(
        "--csv", action="append", required=True, help="sweep CSV path (repeatable)"
    )
    parser.add_argument(
        "--x", choices=("rho_d", "r_c"), required=True, help="swept variable on the x axis"
    )
    parser.add_argument("--out", required=True, help="output image path (.svg or .png)")
    parser.add_argument("--title", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = FigureSpec(
            csv_paths=tuple(args.csv), x_variable=args.x, out_path=args.out, title=args.title
        )
        path = render(spec)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
