"""Render survey CSVs into the reference figures.

Output is deterministic for identical input: fixed styling, Agg backend,
no timestamps in the image metadata.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .schemas import read_curves, read_dimscan, read_global, read_scatter
from .specs import FALLBACK_COLORS, FIGURES, PPT_STYLE, SERIES_COLORS, FigureSpec


def _series_color(label: str, fallback_index: int) -> str:
    return SERIES_COLORS.get(label, FALLBACK_COLORS[fallback_index % len(FALLBACK_COLORS)])


def _finish(fig, ax, spec: FigureSpec, out_path: Path, annotate_empty: bool) -> None:
    ax.set_xlim(*spec.xlim)
    ax.set_ylim(*spec.ylim)
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    ax.set_title(spec.title, fontsize=10)
    if annotate_empty:
        ax.annotate("no data", xy=(0.5, 0.5), xycoords="axes fraction",
                    ha="center", va="center", fontsize=14, color="gray")
    else:
        ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def _render_curve(spec: FigureSpec, csv_path: Path, out_path: Path) -> None:
    series = read_curves(csv_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    index = 0
    for s in series:
        filled = s.n_total > 0
        if s.label == "ppt":
            ax.plot(s.centers[filled], s.p[filled], label="Peres (PPT)", **PPT_STYLE)
            continue
        ax.errorbar(
            s.centers[filled], s.p[filled], yerr=s.std_err[filled],
            label=f"q = {s.label}", color=_series_color(s.label, index),
            marker="o", markersize=2.5, linewidth=0.9, elinewidth=0.6, capsize=0,
        )
        index += 1
    _finish(fig, ax, spec, out_path, annotate_empty=not series)


def _render_global(spec: FigureSpec, csv_path: Path, out_path: Path) -> None:
    data = read_global(csv_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    if data["p"].size:
        order = np.argsort(data["inv_q"])
        ax.errorbar(
            data["inv_q"][order], data["p"][order], yerr=data["std_err"][order],
            color="tab:blue", marker="o", markersize=4, linewidth=1.0,
            elinewidth=0.8, capsize=2, label="entropic vs Peres agreement",
        )
    _finish(fig, ax, spec, out_path, annotate_empty=not data["p"].size)


def _render_scatter(spec: FigureSpec, csv_path: Path, out_path: Path) -> None:
    data = read_scatter(csv_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    if data["delta"].size:
        ax.plot(data["delta"], data["c_squared"], linestyle="none",
                marker=".", markersize=1.5, color="tab:blue", alpha=0.5,
                label=f"{data['delta'].size} violating states")
    _finish(fig, ax, spec, out_path, annotate_empty=not data["delta"].size)


DIMSCAN_FAMILIES = (
    ("N1 = 2", lambda n_a, n_b: n_a == 2, "tab:blue"),
    ("N1 = 3", lambda n_a, n_b: n_a == 3, "tab:green"),
    ("N1 = N2", lambda n_a, n_b: n_a == n_b, "tab:red"),
)


def _render_dimscan(spec: FigureSpec, csv_path: Path, out_path: Path) -> None:
    data = read_dimscan(csv_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    empty = not data["n"].size
    for name, belongs, color in DIMSCAN_FAMILIES:
        mask = np.array([belongs(a, b) for a, b in zip(data["n_a"], data["n_b"])], dtype=bool)
        if not mask.any():
            continue
        order = np.argsort(data["n"][mask])
        ax.errorbar(
            data["n"][mask][order], data["p_entropic_inf"][mask][order],
            yerr=data["se_entropic"][mask][order], label=name, color=color,
            marker="s", markersize=4, linewidth=1.0, elinewidth=0.8, capsize=2,
        )
    if not empty:
        order = np.argsort(data["n"])
        ax.plot(data["n"][order], data["p_ppt"][order], label="Peres (PPT)", **PPT_STYLE)
    _finish(fig, ax, spec, out_path, annotate_empty=empty)


_RENDERERS = {
    "curve": _render_curve,
    "global": _render_global,
    "scatter": _render_scatter,
    "dimscan": _render_dimscan,
}


def render(figure_id: int, csv_paths: list[Path], out_path: Path) -> None:
    """Render one figure from its CSV input(s) to an image file."""
    if figure_id not in FIGURES:
        raise ValueError(f"figure id must be 1..10, got {figure_id}")
    if len(csv_paths) != 1:
        raise ValueError(f"figure {figure_id} takes exactly one CSV, got {len(csv_paths)}")
    spec = FIGURES[figure_id]
    _RENDERERS[spec.kind](spec, Path(csv_paths[0]), Path(out_path))
