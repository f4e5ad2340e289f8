"""Separability classifiers: Peres PPT, entropic positivity, coincidence.

The PPT flag equals separability only for 2x2 and 2x3 systems; for larger
dimensions it is reported as "ppt" and never relabeled "separable" (bound
entanglement exists there).
"""

from __future__ import annotations

from dataclasses import dataclass

from .entropy import EntropicParameter, conditional_sign_report
from .linalg import hermitian_eigenvalues
from .states import DensityMatrix, partial_transpose

PPT_TOL = 1e-10


@dataclass(frozen=True)
class Classification:
    """Outcome of the two separability tests on one state."""

    ppt: bool
    entropic_positive: bool

    @property
    def coincident(self) -> bool:
        """True when both tests reach the same conclusion."""
        return self.ppt == self.entropic_positive


def is_ppt(rho: DensityMatrix, tol: float = PPT_TOL) -> bool:
    """Peres test: does the partial transpose stay positive-semidefinite?"""
    min_eig = float(hermitian_eigenvalues(partial_transpose(rho, "B"))[-1])
    return min_eig >= -tol


def entropic_positive(rho: DensityMatrix, p: EntropicParameter) -> bool:
    """Classical q-entropic inequalities: both conditional entropies >= 0."""
    return conditional_sign_report(rho, p).both_nonnegative


def classify(rho: DensityMatrix, p: EntropicParameter) -> Classification:
    """Run both tests and report whether they coincide."""
    return Classification(ppt=is_ppt(rho), entropic_positive=entropic_positive(rho, p))
