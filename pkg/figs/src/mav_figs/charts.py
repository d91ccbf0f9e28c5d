"""Chart construction and rendering for the seven figure analogues.

Each chart is first assembled as plain data (ChartSpec) taken verbatim from
the CSVs (first replicate of each parameter cell for time-series charts,
summary medians for the optimization-time curve), then drawn once as PNG
and SVG.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
# fixed hash salt keeps SVG element ids (and thus output bytes) reproducible
matplotlib.rcParams["svg.hashsalt"] = "mav-figs"
import matplotlib.pyplot as plt

from .reader import ChartDataError, preset_runs, read_run, read_summary

LOCUS_COLUMNS = (
    ("mean_act_la", "left arm"),
    ("mean_act_ra", "right arm"),
    ("mean_act_ll", "left leg"),
    ("mean_act_rl", "right leg"),
    ("mean_act_head", "head"),
    ("mean_act_tail", "tail"),
)

STRATEGY_ORDER = ("none", "ms", "ms+imit", "ms+imit+kmut")


@dataclass
class Series:
    label: str
    x: list[float]
    y: list[float]


@dataclass
class ChartSpec:
    name: str
    title: str
    x_label: str
    y_label: str
    series: list[Series] = field(default_factory=list)


def _first_replicates(preset_dir: Path) -> list[tuple[str, Path]]:
    return [(cell, paths[0]) for cell, paths in sorted(preset_runs(preset_dir).items())]


def _cell_sort_key(cell: str):
    if "=" in cell:
        _, _, value = cell.partition("=")
        try:
            return (0, float(value), cell)
        except ValueError:
            pass
        if value in STRATEGY_ORDER:
            return (1, STRATEGY_ORDER.index(value), cell)
    return (2, 0.0, cell)


def _per_cell_column(preset_dir: Path, column: str, y_label: str, name: str, title: str) -> ChartSpec:
    spec = ChartSpec(name=name, title=title, x_label="iteration", y_label=y_label)
    cells = sorted(_first_replicates(preset_dir), key=lambda item: _cell_sort_key(item[0]))
    for cell, path in cells:
        run = read_run(path)
        spec.series.append(Series(label=cell, x=run.columns["iteration"], y=run.columns[column]))
    return spec


def _locus_traces(preset_dir: Path, name: str, title: str) -> ChartSpec:
    cells = _first_replicates(preset_dir)
    run = read_run(cells[0][1])
    spec = ChartSpec(name=name, title=title, x_label="iteration", y_label="mean locus activation")
    for column, label in LOCUS_COLUMNS:
        spec.series.append(Series(label=label, x=run.columns["iteration"], y=run.columns[column]))
    return spec


def _optimization_time(preset_dir: Path) -> ChartSpec:
    summary_path = Path(preset_dir) / "summary.csv"
    rows = [r for r in read_summary(summary_path) if r.metric == "convergence_iteration"]
    if not rows:
        raise ChartDataError(f"{summary_path}: missing column 'convergence_iteration' rows")
    points = []
    for row in rows:
        key, _, value = row.cell_params.partition("=")
        if key != "mutation_rate":
            raise ChartDataError(
                f"{summary_path}: expected mutation_rate cells, got {row.cell_params!r}"
            )
        points.append((float(value), row.median))
    points.sort()
    spec = ChartSpec(
        name="figure3",
        title="Optimization time by mutation rate",
        x_label="mutation rate per locus",
        y_label="median iterations to all-optimal",
    )
    spec.series.append(
        Series(label="median convergence", x=[p for p, _ in points], y=[v for _, v in points])
    )
    return spec


def build_chart(preset: str, preset_dir: Path | str) -> ChartSpec:
    preset_dir = Path(preset_dir)
    if preset == "figure2":
        return _per_cell_column(
            preset_dir, "diversity", "distinct implemented actions",
            "figure2", "Action diversity by creation share",
        )
    if preset == "figure3":
        return _optimization_time(preset_dir)
    if preset == "figure4":
        return _locus_traces(preset_dir, "figure4", "Mean locus activations, mutation rate 0.01")
    if preset == "figure5":
        return _locus_traces(preset_dir, "figure5", "Mean locus activations, mutation rate 0.67")
    if preset == "figure6":
        return _per_cell_column(
            preset_dir, "mean_fitness", "mean fitness",
            "figure6", "Cumulative strategy ladder",
        )
    if preset == "figure7":
        return _per_cell_column(
            preset_dir, "mean_fitness", "mean fitness",
            "figure7", "Mean fitness by creation share",
        )
    if preset == "figure8":
        return _per_cell_column(
            preset_dir, "max_fitness_so_far", "fittest idea so far",
            "figure8", "Fittest idea by creation share",
        )
    raise ChartDataError(f"unknown preset {preset!r}")


def render_chart(spec: ChartSpec, out_dir: Path | str) -> list[Path]:
    """Draw one spec as PNG and SVG; returns the written paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    try:
        for series in spec.series:
            ax.plot(series.x, series.y, label=series.label, linewidth=1.4)
        ax.set_title(spec.title)
        ax.set_xlabel(spec.x_label)
        ax.set_ylabel(spec.y_label)
        ax.legend(fontsize="small")
        fig.tight_layout()
        png = out_dir / f"{spec.name}.png"
        svg = out_dir / f"{spec.name}.svg"
        fig.savefig(png)
        # drop the embedded date so repeated renders are byte-identical
        fig.savefig(svg, metadata={"Date": None})
    finally:
        plt.close(fig)
    return [png, svg]


def render(preset: str, preset_dir: Path | str, out_dir: Path | str) -> list[Path]:
    """Build and draw one preset's chart; errors name the offending file."""
    return render_chart(build_chart(preset, preset_dir), out_dir)
