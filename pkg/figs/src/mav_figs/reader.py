"""Readers for the simulator's CSV output tree.

A preset directory holds `runs/<cell>__repNN.csv` time series plus one
`summary.csv`. Everything here parses those documented formats and nothing
else; no simulation quantity is ever recomputed.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path


class ChartDataError(Exception):
    """Missing or malformed chart input; the message names file and column."""


TIMESERIES_REQUIRED = (
    "iteration",
    "mean_fitness",
    "max_fitness_current",
    "max_fitness_so_far",
    "diversity",
    "mean_act_la",
    "mean_act_ra",
    "mean_act_ll",
    "mean_act_rl",
    "mean_act_head",
    "mean_act_tail",
)

SUMMARY_REQUIRED = ("cell_params", "metric", "median", "q1", "q3", "n")


@dataclass
class RunSeries:
    """One run: provenance config plus the raw data columns."""

    path: Path
    config: dict[str, str]
    columns: dict[str, list[float]]


def read_run(path: Path | str) -> RunSeries:
    path = Path(path)
    if not path.exists():
        raise ChartDataError(f"{path}: file not found")
    config: dict[str, str] = {}
    data_lines: list[str] = []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            stripped = line.lstrip("# ").strip()
            if "=" in stripped:
                key, _, value = stripped.partition("=")
                config[key.strip()] = value.strip()
        elif line.strip():
            data_lines.append(line)
    rows = list(csv.reader(data_lines))
    if not rows:
        raise ChartDataError(f"{path}: no data rows")
    header = rows[0]
    missing = [column for column in TIMESERIES_REQUIRED if column not in header]
    if missing:
        raise ChartDataError(f"{path}: missing column(s) {', '.join(missing)}")
    columns: dict[str, list[float]] = {name: [] for name in header}
    for row_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ChartDataError(f"{path}: row {row_no} has {len(row)} fields, expected {len(header)}")
        for name, value in zip(header, row):
            try:
                columns[name].append(float(value))
            except ValueError as exc:
                raise ChartDataError(f"{path}: bad value {value!r} in column {name!r}") from exc
    return RunSeries(path=path, config=config, columns=columns)


@dataclass
class SummaryRow:
    cell_params: str
    metric: str
    median: float
    q1: float
    q3: float
    n: int


def read_summary(path: Path | str) -> list[SummaryRow]:
    path = Path(path)
    if not path.exists():
        raise ChartDataError(f"{path}: file not found")
    rows = list(csv.reader(path.read_text().splitlines()))
    if not rows:
        raise ChartDataError(f"{path}: empty file")
    header = rows[0]
    for column in SUMMARY_REQUIRED:
        if column not in header:
            raise ChartDataError(f"{path}: missing column {column!r}")
    index = {name: header.index(name) for name in SUMMARY_REQUIRED}
    out = []
    for row_no, row in enumerate(rows[1:], start=2):
        try:
            out.append(
                SummaryRow(
                    cell_params=row[index["cell_params"]],
                    metric=row[index["metric"]],
                    median=float(row[index["median"]]),
                    q1=float(row[index["q1"]]),
                    q3=float(row[index["q3"]]),
                    n=int(row[index["n"]]),
                )
            )
        except (IndexError, ValueError) as exc:
            raise ChartDataError(f"{path}: malformed row {row_no}") from exc
    return out


def preset_runs(preset_dir: Path | str) -> dict[str, list[Path]]:
    """Run files grouped by cell label, each group sorted by replicate."""
    runs_dir = Path(preset_dir) / "runs"
    if not runs_dir.is_dir():
        raise ChartDataError(f"{runs_dir}: directory not found")
    groups: dict[str, list[Path]] = {}
    for path in sorted(runs_dir.glob("*.csv")):
        cell, _, _ = path.stem.rpartition("__rep")
        groups.setdefault(cell or path.stem, []).append(path)
    if not groups:
        raise ChartDataError(f"{runs_dir}: no run CSVs")
    return groups
