"""`mav-figs render --preset NAME --in DIR --out DIR`

Renders a figure analogue (PNG + SVG) from a completed preset directory.
Exit codes: 0 success, 1 bad arguments or chart-data error, 2 IO error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .charts import render
from .reader import ChartDataError

PRESETS = ("figure2", "figure3", "figure4", "figure5", "figure6", "figure7", "figure8")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="mav-figs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p_render = sub.add_parser("render", help="render one preset's chart")
    p_render.add_argument("--preset", choices=PRESETS, required=True)
    p_render.add_argument("--in", dest="preset_dir", type=Path, required=True)
    p_render.add_argument("--out", dest="out_dir", type=Path, required=True)
    args = parser.parse_args(argv)
    try:
        paths = render(args.preset, args.preset_dir, args.out_dir)
    except ChartDataError as exc:
        print(f"chart error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for path in paths:
        print(f"wrote {path}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
