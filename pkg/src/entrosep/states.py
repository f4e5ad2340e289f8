"""Density matrices with bipartite structure, and random-state generation.

Composite basis convention: the joint index is ``i = a * n_b + b``
(subsystem A major, subsystem B minor). Every partial operation in this
module and the spin-flip basis in :mod:`entrosep.entanglement` use this
one convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, StructureError
from .linalg import PSD_TOL, _flat_simplex, haar_unitary, hermitian_eigenvalues

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10


@dataclass(frozen=True)
class BipartiteDims:
    """Subsystem dimensions (n_a, n_b) of a bipartite Hilbert space."""

    n_a: int
    n_b: int

    def __post_init__(self) -> None:
        if self.n_a < 2 or self.n_b < 2:
            raise DimensionError(
                f"both subsystem dimensions must be >= 2, got ({self.n_a}, {self.n_b})"
            )

    @property
    def total(self) -> int:
        return self.n_a * self.n_b


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive-semidefinite, unit-trace complex matrix.

    `dims`, when present, records the bipartite split used by the partial
    trace / partial transpose operations. Instances are immutable; the
    wrapped array is marked read-only.
    """

    matrix: np.ndarray
    dims: BipartiteDims | None = field(default=None)

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"density matrix must be square, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise ValueError("density matrix is not Hermitian within tolerance")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise ValueError(f"density matrix trace is {np.trace(m):.12g}, expected 1")
        if np.min(np.linalg.eigvalsh((m + m.conj().T) / 2)) < -PSD_TOL:
            raise ValueError("density matrix has a negative eigenvalue beyond tolerance")
        if self.dims is not None and self.dims.total != m.shape[0]:
            raise StructureError(
                f"dims {self.dims.n_a}x{self.dims.n_b} do not match matrix size {m.shape[0]}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def spectrum(self) -> np.ndarray:
        """Eigenvalues, descending, clipped of PSD-tolerance round-off."""
        return np.clip(hermitian_eigenvalues(self.matrix), 0.0, None)

    def _require_dims(self) -> BipartiteDims:
        if self.dims is None:
            raise StructureError("operation requires bipartite dims metadata")
        return self.dims


def sample_mixed_state(dims: BipartiteDims, rng: np.random.Generator) -> DensityMatrix:
    """Sample a mixed state from the product measure Haar x flat simplex.

    Draws a Haar unitary U, then an eigenvalue vector uniform on the
    simplex (in that order), and returns U diag(lambda) U†. The spectrum
    of the result equals the simplex draw up to round-off.
    """
    n = dims.total
    u = haar_unitary(n, rng)
    lam = _flat_simplex(n, rng)
    return DensityMatrix((u * lam) @ u.conj().T, dims)


def sample_pure_state(dims: BipartiteDims, rng: np.random.Generator) -> DensityMatrix:
    """Sample a Haar-random pure state |psi><psi| (rank-1 projector)."""
    psi = haar_unitary(dims.total, rng)[:, 0]
    return DensityMatrix(np.outer(psi, psi.conj()), dims)


def _partial_trace_array(m: np.ndarray, n_a: int, n_b: int, keep: str) -> np.ndarray:
    """Partial trace of stacked matrices (..., n_a*n_b, n_a*n_b)."""
    r = m.reshape(m.shape[:-2] + (n_a, n_b, n_a, n_b))
    if keep == "A":
        return np.einsum("...ijkj->...ik", r)
    if keep == "B":
        return np.einsum("...jijk->...ik", r)
    raise ValueError(f"subsystem selector must be 'A' or 'B', got {keep!r}")


def _partial_transpose_array(m: np.ndarray, n_a: int, n_b: int, on: str) -> np.ndarray:
    """Partial transpose of stacked matrices on subsystem A or B."""
    r = m.reshape(m.shape[:-2] + (n_a, n_b, n_a, n_b))
    nd = r.ndim
    batch = tuple(range(nd - 4))
    if on == "B":
        perm = batch + (nd - 4, nd - 1, nd - 2, nd - 3)
    elif on == "A":
        perm = batch + (nd - 2, nd - 3, nd - 4, nd - 1)
    else:
        raise ValueError(f"subsystem selector must be 'A' or 'B', got {on!r}")
    return r.transpose(perm).reshape(m.shape)


def partial_trace(rho: DensityMatrix, keep: str) -> DensityMatrix:
    """Reduce to the marginal state of one subsystem ('A' or 'B')."""
    dims = rho._require_dims()
    reduced = _partial_trace_array(rho.matrix, dims.n_a, dims.n_b, keep)
    return DensityMatrix(reduced)


def partial_transpose(rho: DensityMatrix, on: str = "B") -> np.ndarray:
    """Transpose one subsystem's indices.

    Returns a plain matrix, not a DensityMatrix: the result may fail
    positivity, and that failure is exactly the Peres signal.
    """
    dims = rho._require_dims()
    return _partial_transpose_array(rho.matrix, dims.n_a, dims.n_b, on)


def participation_ratio(rho: DensityMatrix) -> float:
    """R = 1 / tr(rho^2); ranges from 1 (pure) to N (maximally mixed)."""
    purity = float(np.sum(np.abs(rho.matrix) ** 2))
    return 1.0 / purity


def lambda_max(rho: DensityMatrix) -> float:
    """Largest eigenvalue; 1 for pure states, 1/N for the maximally mixed."""
    return float(rho.spectrum()[0])


# ---------------------------------------------------------------------------
# Analytic reference states (test oracles and the selftest suite)
# ---------------------------------------------------------------------------

TWO_QUBITS = BipartiteDims(2, 2)


def bell_psi_minus() -> DensityMatrix:
    """The singlet |psi-><psi-| with |psi-> = (|01> - |10>)/sqrt(2)."""
    psi = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0)
    return DensityMatrix(np.outer(psi, psi), TWO_QUBITS)


def werner_state(p: float) -> DensityMatrix:
    """Werner family p |psi-><psi-| + (1-p) I/4 for p in [0, 1]."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner parameter must lie in [0, 1], got {p}")
    return DensityMatrix(p * bell_psi_minus().matrix + (1.0 - p) * np.eye(4) / 4.0, TWO_QUBITS)


def product_state(rho_a: np.ndarray, rho_b: np.ndarray) -> DensityMatrix:
    """Assemble rho_a (x) rho_b with the dims metadata filled in."""
    rho_a = np.asarray(rho_a)
    rho_b = np.asarray(rho_b)
    dims = BipartiteDims(rho_a.shape[0], rho_b.shape[0])
    return DensityMatrix(np.kron(rho_a, rho_b), dims)


def maximally_mixed(dims: BipartiteDims) -> DensityMatrix:
    """I/N on the composite space."""
    n = dims.total
    return DensityMatrix(np.eye(n) / n, dims)
