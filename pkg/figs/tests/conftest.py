"""Synthetic preset directories in the simulator's documented CSV formats."""
from __future__ import annotations

from pathlib import Path

import pytest

COLUMNS = (
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

BASE_CONFIG = {
    "rows": "10",
    "cols": "10",
    "p_create": "0.5",
    "mutation_rate": "0.17",
    "mental_simulation": "True",
    "imitation_enabled": "True",
    "knowledge_ops": "True",
    "iterations": "12",
    "seed": "1",
    "memory_backend": "direct",
    "fitness_backend": "analytic",
}


def write_run(path: Path, config: dict[str, str], n_iterations: int, salt: int) -> None:
    """A deterministic synthetic time series shaped like real output."""
    lines = [f"# {key} = {value}" for key, value in config.items()]
    lines.append(",".join(COLUMNS))
    for i in range(n_iterations + 1):
        mean = min(10.0, 2.5 + 0.05 * salt + 0.4 * i)
        best = min(10.0, mean + 1.0)
        acts = [((i * (k + 1) + salt) % 11 - 5) / 10.0 for k in range(6)]
        row = [
            str(i),
            f"{mean:.6f}",
            f"{best:.6f}",
            f"{best:.6f}",
            str((i + salt) % 7),
            *(f"{a:.6f}" for a in acts),
        ]
        lines.append(",".join(row))
    path.write_text("\n".join(lines) + "\n")


def write_preset(root: Path, name: str, cells: list[tuple[str, dict[str, str]]],
                 replicates: int = 2, n_iterations: int = 12) -> Path:
    preset_dir = root / name
    runs = preset_dir / "runs"
    runs.mkdir(parents=True)
    summary_lines = ["cell_params,metric,median,q1,q3,n"]
    for cell_index, (label, overrides) in enumerate(cells):
        config = {**BASE_CONFIG, **overrides, "iterations": str(n_iterations)}
        for rep in range(replicates):
            write_run(
                runs / f"{label}__rep{rep:02d}.csv",
                {**config, "seed": str(100 * cell_index + rep)},
                n_iterations,
                salt=cell_index + rep,
            )
        for metric, value in (
            ("convergence_iteration", 10.0 + 3.0 * cell_index),
            ("stabilized_diversity", float(cell_index + 1)),
            ("mean_fitness_at_10", 6.0 + 0.5 * cell_index),
        ):
            summary_lines.append(
                f"{label},{metric},{value:.6f},{value - 0.5:.6f},{value + 0.5:.6f},{replicates}"
            )
    (preset_dir / "summary.csv").write_text("\n".join(summary_lines) + "\n")
    return preset_dir


PRESET_CELLS = {
    "figure2": [(f"p_create={p}", {"p_create": str(p)}) for p in (0.0, 0.5, 1.0)],
    "figure3": [(f"mutation_rate={m}", {"mutation_rate": str(m)}) for m in (0.01, 0.17, 0.67)],
    "figure4": [("mutation_rate=0.01", {"mutation_rate": "0.01"})],
    "figure5": [("mutation_rate=0.67", {"mutation_rate": "0.67"})],
    "figure6": [
        ("strategies=none", {"mental_simulation": "False", "imitation_enabled": "False", "knowledge_ops": "False"}),
        ("strategies=ms", {"imitation_enabled": "False", "knowledge_ops": "False"}),
        ("strategies=ms+imit", {"knowledge_ops": "False"}),
        ("strategies=ms+imit+kmut", {}),
    ],
    "figure7": [(f"p_create={p}", {"p_create": str(p)}) for p in (0.0, 0.5, 0.67, 1.0)],
    "figure8": [(f"p_create={p}", {"p_create": str(p)}) for p in (0.0, 0.5, 1.0)],
}


@pytest.fixture
def preset_tree(tmp_path):
    """All seven synthetic preset directories under one root."""
    for name, cells in PRESET_CELLS.items():
        write_preset(tmp_path, name, cells)
    return tmp_path
