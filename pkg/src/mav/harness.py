"""Experiment harness: config files, presets, sweeps, CSV output.

Presets reproduce the published experiment grids (figure2..figure8); sweeps
run a cartesian product of config overrides with seeded replicates, write one
time-series CSV per run plus a summary CSV of median/IQR checkpoint
statistics per cell.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import math
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .ideas import BodyPart
from .seeding import derive_seed
from .society import ConfigError, MetricsRecord, SocietyConfig, run

TIMESERIES_COLUMNS = (
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

SUMMARY_COLUMNS = ("cell_params", "metric", "median", "q1", "q3", "n")

_BOOL_WORDS = {
    "true": True,
    "1": True,
    "yes": True,
    "on": True,
    "false": False,
    "0": False,
    "no": False,
    "off": False,
}

_CONFIG_FIELDS = {f.name: f.type for f in dataclasses.fields(SocietyConfig)}


@dataclass(frozen=True)
class ExperimentSpec:
    """A sweep: base config, parameter grid, replicate count, output root."""

    base: SocietyConfig
    sweep_params: tuple[tuple[str, tuple], ...]
    replicates: int = 20
    output_dir: str | None = None


@dataclass(frozen=True)
class SummaryRow:
    """Median and interquartile range of one checkpoint metric in one cell."""

    cell_params: str
    metric: str
    median: float
    q1: float
    q3: float
    n: int


def _parse_value(key: str, raw: str, line_no: int):
    kind = _CONFIG_FIELDS[key]
    raw = raw.strip()
    try:
        if kind in ("int", int):
            return int(raw)
        if kind in ("float", float):
            return float(raw)
        if kind in ("bool", bool):
            word = raw.lower()
            if word not in _BOOL_WORDS:
                raise ValueError(raw)
            return _BOOL_WORDS[word]
        return raw
    except ValueError as exc:
        raise ConfigError(f"line {line_no}: bad value for {key}: {raw!r}") from exc


def parse_config(text: str) -> SocietyConfig | ExperimentSpec:
    """Parse `key = value` lines; `#` starts a comment.

    Config-field keys build a SocietyConfig (defaults fill the gaps);
    `sweep.<field> = v1, v2, ...`, `replicates`, or `output_dir` lines
    promote the result to an ExperimentSpec.
    """
    overrides: dict = {}
    sweep_params: list[tuple[str, tuple]] = []
    replicates: int | None = None
    output_dir: str | None = None
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected key = value, got {raw_line!r}")
        key, _, raw = line.partition("=")
        key = key.strip()
        raw = raw.strip()
        if key in _CONFIG_FIELDS:
            value = _parse_value(key, raw, line_no)
            try:
                SocietyConfig(**{key: value}).validate()
            except ConfigError as exc:
                raise ConfigError(f"line {line_no}: {key}: {exc}") from None
            overrides[key] = value
        elif key.startswith("sweep."):
            field = key[len("sweep."):]
            if field not in _CONFIG_FIELDS:
                raise ConfigError(f"line {line_no}: unknown sweep key {field!r}")
            values = tuple(
                _parse_value(field, part, line_no) for part in raw.split(",")
            )
            if not values:
                raise ConfigError(f"line {line_no}: empty sweep {field!r}")
            for value in values:
                try:
                    SocietyConfig(**{field: value}).validate()
                except ConfigError as exc:
                    raise ConfigError(f"line {line_no}: {field}: {exc}") from None
            sweep_params.append((field, values))
        elif key == "replicates":
            try:
                replicates = int(raw)
            except ValueError as exc:
                raise ConfigError(f"line {line_no}: bad replicates {raw!r}") from exc
            if replicates < 1:
                raise ConfigError(f"line {line_no}: replicates must be >= 1")
        elif key == "output_dir":
            output_dir = raw
        else:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
    base = SocietyConfig(**overrides)
    base.validate()
    if sweep_params or replicates is not None or output_dir is not None:
        return ExperimentSpec(
            base=base,
            sweep_params=tuple(sweep_params),
            replicates=replicates if replicates is not None else 20,
            output_dir=output_dir,
        )
    return base


def config_lines(config: SocietyConfig) -> list[str]:
    """Provenance comment lines (re-parseable by parse_config when stripped)."""
    return [
        f"# {f.name} = {getattr(config, f.name)}"
        for f in dataclasses.fields(SocietyConfig)
    ]


def _format_record(record: MetricsRecord) -> list[str]:
    acts = record.mean_locus_activation
    return [
        str(record.iteration),
        f"{record.mean_fitness:.6f}",
        f"{record.max_fitness_current:.6f}",
        f"{record.max_fitness_so_far:.6f}",
        str(record.diversity),
        *(f"{acts[p]:.6f}" for p in BodyPart),
    ]


def write_timeseries(
    records: Sequence[MetricsRecord], config: SocietyConfig, path: Path | str
) -> None:
    """One CSV per run: provenance comments, header row, one row per record."""
    if not records:
        raise ValueError("no records to write")
    buffer = io.StringIO()
    for line in config_lines(config):
        buffer.write(line + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TIMESERIES_COLUMNS)
    for record in records:
        writer.writerow(_format_record(record))
    Path(path).write_text(buffer.getvalue())


def read_timeseries(path: Path | str) -> tuple[SocietyConfig, list[MetricsRecord]]:
    """Inverse of write_timeseries (floats at written precision)."""
    comment_lines: list[str] = []
    data_lines: list[str] = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            comment_lines.append(line.lstrip("# "))
        elif line.strip():
            data_lines.append(line)
    config = parse_config("\n".join(comment_lines))
    if not isinstance(config, SocietyConfig):
        raise ConfigError(f"{path}: header does not describe a single run")
    rows = list(csv.reader(data_lines))
    if not rows or tuple(rows[0]) != TIMESERIES_COLUMNS:
        raise ConfigError(f"{path}: missing or unexpected header row")
    records = [
        MetricsRecord(
            iteration=int(row[0]),
            mean_fitness=float(row[1]),
            max_fitness_current=float(row[2]),
            max_fitness_so_far=float(row[3]),
            diversity=int(row[4]),
            mean_locus_activation=tuple(float(v) for v in row[5:11]),
        )
        for row in rows[1:]
    ]
    return config, records


# --- checkpoint statistics ------------------------------------------------

def convergence_iteration(records: Sequence[MetricsRecord]) -> float:
    """First iteration with every agent on an optimal action (mean hits the
    landscape maximum exactly); inf when the run never converges."""
    for record in records:
        if record.mean_fitness == 10.0:
            return float(record.iteration)
    return math.inf


def stabilized_diversity(records: Sequence[MetricsRecord], window: int = 50) -> int:
    """Mode of diversity over the final `window` records (smallest on ties)."""
    tail = [r.diversity for r in records[-window:]]
    return min(set(tail), key=lambda v: (-tail.count(v), v))


def stabilization_iteration(
    series: Sequence[float], band: float = 0.1, min_tail: int = 20
) -> float:
    """First iteration after which the series stays within `band` of its
    final value through the end of the run, requiring at least `min_tail`
    iterations inside; inf when the series never settles."""
    final = series[-1]
    start = None
    for index in range(len(series) - 1, -1, -1):
        if abs(series[index] - final) <= band:
            start = index
        else:
            break
    if start is None or len(series) - start < min_tail:
        return math.inf
    return float(start)


def median_iqr(values: Sequence[float]) -> tuple[float, float, float]:
    """(median, q1, q3); the single-value case degenerates to that value."""
    ordered = sorted(values)
    if len(ordered) == 1:
        v = ordered[0]
        return v, v, v
    med = statistics.median(ordered)
    q1, _, q3 = statistics.quantiles(ordered, n=4, method="inclusive")
    return med, q1, q3


def _checkpoint_metrics(records: Sequence[MetricsRecord]) -> dict[str, float]:
    def at(index: int) -> MetricsRecord:
        return records[min(index, len(records) - 1)]

    return {
        "convergence_iteration": convergence_iteration(records),
        "stabilized_diversity": float(stabilized_diversity(records)),
        "mean_fitness_at_10": at(10).mean_fitness,
        "mean_fitness_at_20": at(20).mean_fitness,
        "mean_fitness_at_50": at(50).mean_fitness,
        "mean_fitness_at_100": at(100).mean_fitness,
        "final_mean_fitness": records[-1].mean_fitness,
        "max_fitness_so_far_at_20": at(20).max_fitness_so_far,
    }


SUMMARY_METRICS = (
    "convergence_iteration",
    "stabilized_diversity",
    "mean_fitness_at_10",
    "mean_fitness_at_20",
    "mean_fitness_at_50",
    "mean_fitness_at_100",
    "final_mean_fitness",
    "max_fitness_so_far_at_20",
)


# --- execution ------------------------------------------------------------

def run_replicates(
    configs: Sequence[SocietyConfig], workers: int | None = None
) -> list[list[MetricsRecord]]:
    """Run many configs, in submission order, optionally on a process pool."""
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(configs) <= 1:
        return [run(c) for c in configs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, configs, chunksize=4))


@dataclass(frozen=True)
class Cell:
    """One parameter cell of a sweep: a label plus config overrides."""

    label: str
    overrides: dict


def _expand_cells(spec: ExperimentSpec) -> list[Cell]:
    cells = [Cell("base", {})]
    for name, values in spec.sweep_params:
        cells = [
            Cell(
                f"{cell.label};{name}={value}" if cell.label != "base" else f"{name}={value}",
                {**cell.overrides, name: value},
            )
            for cell in cells
            for value in values
        ]
    return cells


def _slug(label: str) -> str:
    return label.replace(";", "_").replace("/", "-")


def run_cells(
    base: SocietyConfig,
    cells: Sequence[Cell],
    replicates: int,
    out_dir: Path | str,
    workers: int | None = None,
) -> Path:
    """Run every (cell, replicate) pair, write run CSVs and the summary CSV.

    Replicate seeds derive from (base seed, cell index, replicate index), so
    results do not depend on scheduling; returns the summary path.
    """
    out_dir = Path(out_dir)
    runs_dir = out_dir / "runs"
    runs_dir.mkdir(parents=True, exist_ok=True)
    configs: list[SocietyConfig] = []
    labels: list[tuple[str, int]] = []
    for cell_index, cell in enumerate(cells):
        for rep in range(replicates):
            config = dataclasses.replace(
                base,
                **cell.overrides,
                seed=derive_seed(base.seed, cell_index, rep),
            )
            config.validate()
            configs.append(config)
            labels.append((cell.label, rep))
    results = run_replicates(configs, workers=workers)
    for (label, rep), config, records in zip(labels, configs, results):
        write_timeseries(records, config, runs_dir / f"{_slug(label)}__rep{rep:02d}.csv")

    summary_rows: list[SummaryRow] = []
    offset = 0
    for cell in cells:
        cell_metrics = [
            _checkpoint_metrics(records)
            for records in results[offset : offset + replicates]
        ]
        offset += replicates
        for metric in SUMMARY_METRICS:
            med, q1, q3 = median_iqr([m[metric] for m in cell_metrics])
            summary_rows.append(
                SummaryRow(cell.label, metric, med, q1, q3, replicates)
            )
    summary_path = out_dir / "summary.csv"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for row in summary_rows:
        writer.writerow(
            [row.cell_params, row.metric, f"{row.median:.6f}", f"{row.q1:.6f}",
             f"{row.q3:.6f}", row.n]
        )
    summary_path.write_text(buffer.getvalue())
    return summary_path


def sweep(
    spec: ExperimentSpec, out_dir: Path | str | None = None, workers: int | None = None
) -> Path:
    """Run an ExperimentSpec's full cartesian grid."""
    target = out_dir if out_dir is not None else spec.output_dir
    if target is None:
        raise ConfigError("sweep needs an output directory")
    return run_cells(spec.base, _expand_cells(spec), spec.replicates, target, workers)


# --- presets ---------------------------------------------------------------

_P_CREATE_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
_MUTATION_GRID = (0.0, 0.01, 0.04, 0.07, 0.12, 0.17, 0.22, 0.33, 0.45, 0.67)

STRATEGY_LADDER = (
    ("strategies=none", dict(mental_simulation=False, imitation_enabled=False, knowledge_ops=False)),
    ("strategies=ms", dict(mental_simulation=True, imitation_enabled=False, knowledge_ops=False)),
    ("strategies=ms+imit", dict(mental_simulation=True, imitation_enabled=True, knowledge_ops=False)),
    ("strategies=ms+imit+kmut", dict(mental_simulation=True, imitation_enabled=True, knowledge_ops=True)),
)


def _preset_cells(name: str) -> tuple[list[Cell], dict]:
    if name in ("figure2", "figure8"):
        return [Cell(f"p_create={p}", {"p_create": p}) for p in _P_CREATE_GRID], {}
    if name == "figure7":
        grid = sorted(set(_P_CREATE_GRID) | {0.67})
        return [Cell(f"p_create={p}", {"p_create": p}) for p in grid], {}
    if name == "figure3":
        return (
            [Cell(f"mutation_rate={m}", {"mutation_rate": m}) for m in _MUTATION_GRID],
            {"iterations": 400},
        )
    if name == "figure4":
        return [Cell("mutation_rate=0.01", {"mutation_rate": 0.01})], {"iterations": 300}
    if name == "figure5":
        return [Cell("mutation_rate=0.67", {"mutation_rate": 0.67})], {}
    if name == "figure6":
        return [Cell(label, dict(overrides)) for label, overrides in STRATEGY_LADDER], {}
    raise ConfigError(f"unknown preset {name!r}")


PRESET_NAMES = ("figure2", "figure3", "figure4", "figure5", "figure6", "figure7", "figure8")


def run_preset(
    name: str,
    out_dir: Path | str,
    replicates: int = 20,
    base_seed: int = 0,
    workers: int | None = None,
) -> Path:
    """Execute one published-experiment grid; returns the summary path."""
    cells, base_overrides = _preset_cells(name)
    base = dataclasses.replace(SocietyConfig(seed=base_seed), **base_overrides)
    return run_cells(base, cells, replicates, Path(out_dir) / name, workers=workers)
