"""Figure registry: axis domains, labels, and series styling for figures 1-10."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    kind: str  # 'curve' | 'global' | 'scatter' | 'dimscan'
    title: str
    xlabel: str
    ylabel: str
    xlim: tuple[float, float]
    ylim: tuple[float, float] = (0.0, 1.02)


# Color per q token; the PPT reference is always a solid black line.
SERIES_COLORS = {
    "0.5": "tab:purple",
    "1": "tab:blue",
    "2": "tab:green",
    "2.5": "tab:cyan",
    "3": "tab:olive",
    "4": "tab:pink",
    "5": "tab:orange",
    "10": "tab:brown",
    "20": "tab:gray",
    "inf": "tab:red",
}
FALLBACK_COLORS = ["#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
                   "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd"]
PPT_STYLE = {"color": "black", "linestyle": "-", "linewidth": 1.6}

FIGURES: dict[int, FigureSpec] = {
    1: FigureSpec(1, "curve",
                  "Two qubits: P(positive conditional q-entropies) vs R",
                  "participation ratio R", "probability", (1.0, 4.0)),
    2: FigureSpec(2, "curve",
                  "Two qubits: P(entropic test agrees with Peres) vs R",
                  "participation ratio R", "probability", (1.0, 4.0)),
    3: FigureSpec(3, "curve",
                  "Two qubits: P(positive conditional q-entropies) vs lambda_max",
                  "largest eigenvalue", "probability", (0.25, 1.0)),
    4: FigureSpec(4, "curve",
                  "Two qubits: P(entropic test agrees with Peres) vs lambda_max",
                  "largest eigenvalue", "probability", (0.25, 1.0)),
    5: FigureSpec(5, "global",
                  "Two qubits: global agreement probability vs 1/q",
                  "1/q", "probability", (0.0, 0.5), (0.55, 0.80)),
    6: FigureSpec(6, "curve",
                  "Qubit-qutrit: P(positive conditional q-entropies) vs R",
                  "participation ratio R", "probability", (1.0, 6.0)),
    7: FigureSpec(7, "curve",
                  "Qubit-qutrit: P(entropic test agrees with Peres) vs R",
                  "participation ratio R", "probability", (1.0, 6.0)),
    8: FigureSpec(8, "global",
                  "Qubit-qutrit: global agreement probability vs 1/q",
                  "1/q", "probability", (0.0, 0.5), (0.30, 0.55)),
    9: FigureSpec(9, "scatter",
                  "Concurrence squared vs conditional-entropy violation (q=inf)",
                  "S(rho_A) - S(rho_AB)  [nats]", "C^2", (0.0, 0.72)),
    10: FigureSpec(10, "dimscan",
                   "P(positive conditional q-entropies, q=inf) vs total dimension",
                   "total dimension N", "probability", (3.0, 37.0)),
}
