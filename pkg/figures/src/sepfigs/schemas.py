"""Readers for the survey CSV schemas.

Each reader validates the header exactly and returns plain numpy arrays;
a wrong header raises :class:`SchemaError` with both header strings in the
message.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

CURVE_HEADER = ["q", "axis", "bin_center", "n_total", "n_event", "p", "std_err"]
GLOBAL_HEADER = ["q", "inv_q", "p", "std_err", "n"]
DIMSCAN_HEADER = ["n_a", "n_b", "n_total_dim", "p_entropic_inf", "se_entropic",
                  "p_ppt", "se_ppt", "n"]
SCATTER_HEADER = ["delta", "c_squared"]


class SchemaError(ValueError):
    """CSV header does not match the expected schema."""


def _read_rows(path: Path, expected_header: list[str]) -> list[list[str]]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != expected_header:
        found = rows[0] if rows else "<empty file>"
        raise SchemaError(
            f"{path}: expected header {','.join(expected_header)!r}, found {found!r}"
        )
    return rows[1:]


@dataclass(frozen=True)
class CurveSeries:
    """One q-labelled series of a binned-curve CSV."""

    label: str
    axis: str
    centers: np.ndarray
    n_total: np.ndarray
    p: np.ndarray
    std_err: np.ndarray


def read_curves(path: Path) -> list[CurveSeries]:
    """Parse a volume-curve / coincidence-curve CSV into per-label series."""
    rows = _read_rows(path, CURVE_HEADER)
    order: list[str] = []
    grouped: dict[str, list[list[str]]] = {}
    for row in rows:
        grouped.setdefault(row[0], []).append(row)
        if row[0] not in order:
            order.append(row[0])
    series = []
    for label in order:
        block = grouped[label]
        series.append(
            CurveSeries(
                label=label,
                axis=block[0][1],
                centers=np.array([float(r[2]) for r in block]),
                n_total=np.array([int(r[3]) for r in block]),
                p=np.array([float(r[5]) for r in block]),
                std_err=np.array([float(r[6]) for r in block]),
            )
        )
    return series


def read_global(path: Path) -> dict[str, np.ndarray]:
    rows = _read_rows(path, GLOBAL_HEADER)
    return {
        "q": np.array([r[0] for r in rows]),
        "inv_q": np.array([float(r[1]) for r in rows]),
        "p": np.array([float(r[2]) for r in rows]),
        "std_err": np.array([float(r[3]) for r in rows]),
    }


def read_dimscan(path: Path) -> dict[str, np.ndarray]:
    rows = _read_rows(path, DIMSCAN_HEADER)
    return {
        "n_a": np.array([int(r[0]) for r in rows]),
        "n_b": np.array([int(r[1]) for r in rows]),
        "n": np.array([int(r[2]) for r in rows]),
        "p_entropic_inf": np.array([float(r[3]) for r in rows]),
        "se_entropic": np.array([float(r[4]) for r in rows]),
        "p_ppt": np.array([float(r[5]) for r in rows]),
        "se_ppt": np.array([float(r[6]) for r in rows]),
    }


def read_scatter(path: Path) -> dict[str, np.ndarray]:
    rows = _read_rows(path, SCATTER_HEADER)
    return {
        "delta": np.array([float(r[0]) for r in rows]),
        "c_squared": np.array([float(r[1]) for r in rows]),
    }
