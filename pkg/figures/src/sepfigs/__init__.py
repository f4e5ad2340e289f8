"""Render entrosep survey CSVs into the ten reference figures."""

__version__ = "0.1.0"

from .render import render
from .schemas import SchemaError, read_curves, read_dimscan, read_global, read_scatter
from .specs import FIGURES, FigureSpec

__all__ = [
    "FIGURES",
    "FigureSpec",
    "SchemaError",
    "read_curves",
    "read_dimscan",
    "read_global",
    "read_scatter",
    "render",
]
