"""Optional figure rendering next to the CSV output.

Purely a presentation layer: figures are drawn from the already-computed
row dicts, so rendering can never change the data path.  Uses the Agg
backend; files only, no interactive windows.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_MEASURE_LABELS = {"E_N": "logarithmic negativity", "D": "Gaussian quantum discord"}

_SUBSYSTEM_TITLES = {
    "mm": "mechanical[1] + mechanical[2]",
    "oo": "optical[1] + optical[2]",
    "hl": "mechanical[1] + optical[1]",
    "hc": "mechanical[1] + optical[2]",
}


def _series_groups(rows: list[dict], series_param: str) -> dict[float, list[dict]]:
    groups: dict[float, list[dict]] = {}
    for row in rows:
        groups.setdefault(row[series_param], []).append(row)
    return groups


def render_rows(rows: list[dict], path: Path, measure: str,
                series_param: str, log_x: bool, title: str) -> Path:
    """One PNG: a panel per subsystem, a line per series value."""
    subsystems = list(dict.fromkeys(row["subsystem"] for row in rows))
    fig, axes = plt.subplots(
        1, len(subsystems), figsize=(5.2 * len(subsystems), 4.0), squeeze=False
    )
    for ax, sub in zip(axes[0], subsystems):
        sub_rows = [r for r in rows if r["subsystem"] == sub]
        for series_value, group in sorted(_series_groups(sub_rows, series_param).items()):
            xs = [r["sweep_value"] for r in group]
            ys = [r[measure] for r in group]
            ax.plot(xs, ys, label=f"{series_param} = {series_value:g}")
        if log_x:
            ax.set_xscale("log")
        ax.set_xlabel(sub_rows[0]["sweep_name"])
        ax.set_ylabel(_MEASURE_LABELS.get(measure, measure))
        ax.set_title(_SUBSYSTEM_TITLES.get(sub, sub))
        ax.legend(fontsize=8)
        ax.grid(True, alpha=0.3)
    fig.suptitle(title)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_preset_figure(name: str, rows: list[dict], outdir: Path,
                       measure: str, series_param: str, log_x: bool) -> Path:
    return render_rows(
        rows, Path(outdir) / f"{name}.png", measure=measure,
        series_param=series_param, log_x=log_x, title=f"preset {name}",
    )


def save_sweep_figure(rows: list[dict], outdir: Path, log_x: bool) -> list[Path]:
    """Manual sweeps carry a single series; draw one PNG per selected measure."""
    paths = []
    for measure in ("E_N", "D"):
        if rows and rows[0][measure] is None:
            continue
        sweep_name = rows[0]["sweep_name"]
        paths.append(render_rows(
            rows, Path(outdir) / f"sweep_{sweep_name}_{measure}.png",
            measure=measure, series_param="alpha", log_x=log_x,
            title=f"sweep over {sweep_name}",
        ))
    return paths
