"""Command line front end: single runs, presets, sweeps, and the oracle table.

Exit codes: 0 success, 1 configuration error, 2 runtime/IO error.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import harness
from .fitness import fitness_table, optimal_set
from .ideas import alleles_to_str, enumerate_idea_space
from .society import ConfigError, SocietyConfig, run


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mav", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one simulation and write its time series")
    p_run.add_argument("--config", type=Path, help="key = value config file")
    p_run.add_argument("--seed", type=int)
    p_run.add_argument("--iterations", type=int)
    p_run.add_argument("--p-create", type=float, dest="p_create")
    p_run.add_argument("--mutation-rate", type=float, dest="mutation_rate")
    p_run.add_argument("--no-mental-simulation", action="store_true")
    p_run.add_argument("--no-imitation", action="store_true")
    p_run.add_argument("--no-knowledge-ops", action="store_true")
    p_run.add_argument("--grid", help="grid size as RxC, e.g. 10x10")
    p_run.add_argument("--out", type=Path, help="CSV path (default: stdout)")

    p_preset = sub.add_parser("preset", help="run a published-experiment grid")
    p_preset.add_argument("name", choices=harness.PRESET_NAMES)
    p_preset.add_argument("--out", type=Path, required=True)
    p_preset.add_argument("--replicates", type=int, default=20)
    p_preset.add_argument("--seed", type=int, default=0)

    p_sweep = sub.add_parser("sweep", help="run the sweep described by a config file")
    p_sweep.add_argument("--config", type=Path, required=True)
    p_sweep.add_argument("--out", type=Path, help="output directory (overrides config)")

    sub.add_parser("oracle", help="print the 729-action fitness table and the optima")
    return parser


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        rows, _, cols = text.lower().partition("x")
        return int(rows), int(cols)
    except ValueError as exc:
        raise ConfigError(f"bad grid {text!r}, expected RxC") from exc


def _run_config(args: argparse.Namespace) -> SocietyConfig:
    if args.config is not None:
        parsed = harness.parse_config(args.config.read_text())
        if not isinstance(parsed, SocietyConfig):
            raise ConfigError(f"{args.config}: describes a sweep; use `mav sweep`")
        config = parsed
    else:
        config = SocietyConfig()
    overrides = {}
    for key in ("seed", "iterations", "p_create", "mutation_rate"):
        value = getattr(args, key)
        if value is not None:
            overrides[key] = value
    if args.no_mental_simulation:
        overrides["mental_simulation"] = False
    if args.no_imitation:
        overrides["imitation_enabled"] = False
    if args.no_knowledge_ops:
        overrides["knowledge_ops"] = False
    if args.grid:
        overrides["rows"], overrides["cols"] = _parse_grid(args.grid)
    config = dataclasses.replace(config, **overrides)
    config.validate()
    return config


def _cmd_run(args: argparse.Namespace) -> int:
    config = _run_config(args)
    records = run(config)
    if args.out is None:
        for line in harness.config_lines(config):
            print(line)
        print(",".join(harness.TIMESERIES_COLUMNS))
        for record in records:
            print(",".join(harness._format_record(record)))
    else:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        harness.write_timeseries(records, config, args.out)
        print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _cmd_preset(args: argparse.Namespace) -> int:
    summary = harness.run_preset(
        args.name, args.out, replicates=args.replicates, base_seed=args.seed
    )
    print(f"wrote {summary}", file=sys.stderr)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    spec = harness.parse_config(args.config.read_text())
    if isinstance(spec, SocietyConfig):
        spec = harness.ExperimentSpec(base=spec, sweep_params=())
    summary = harness.sweep(spec, out_dir=args.out)
    print(f"wrote {summary}", file=sys.stderr)
    return 0


def _cmd_oracle() -> int:
    table = fitness_table()
    best = optimal_set()
    print("action,fitness")
    for vec in enumerate_idea_space():
        print(f"{alleles_to_str(vec)},{table[vec]:.6f}")
    print(f"# maximum {max(table.values()):.6f} attained by {len(best)} actions:")
    for vec in sorted(best):
        print(f"# {alleles_to_str(vec)}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "preset":
            return _cmd_preset(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_oracle()
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
