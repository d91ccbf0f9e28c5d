#!/usr/bin/env python3
"""Run every published-experiment preset and write CSVs under an output root.

Usage: python scripts/run_all_presets.py OUT_DIR [--replicates N] [--seed N]

Afterwards the chart package (if installed) can render the figure analogues:
    mav-figs render --preset figure2 --in OUT_DIR/figure2 --out OUT_DIR/charts
"""
import argparse
import time

from mav.harness import PRESET_NAMES, run_preset


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir")
    parser.add_argument("--replicates", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for name in PRESET_NAMES:
        start = time.time()
        summary = run_preset(
            name, args.out_dir, replicates=args.replicates, base_seed=args.seed
        )
        print(f"{name}: {summary} ({time.time() - start:.1f}s)")


if __name__ == "__main__":
    main()
