"""Dense complex linear-algebra kernel and random-matrix generators.

All matrix routines accept stacked inputs with shape ``(..., n, n)`` and
operate on the trailing two axes; eigenvalue spectra are returned in
*descending* order throughout the package.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, NotPositiveSemidefiniteError, NumericalError

# Eigenvalues in [-PSD_TOL, 0) are treated as round-off and clamped to zero;
# anything below -PSD_TOL is a genuine PSD violation.
PSD_TOL = 1e-10


def _require_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def hermitianize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (m + m†) / 2."""
    m = _require_square(m)
    return (m + np.conj(np.swapaxes(m, -1, -2))) / 2


def hermitian_eigensystem(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecompose a Hermitian matrix.

    The input is symmetrized first, so slightly non-Hermitian matrices
    (round-off level) are handled transparently.

    Returns
    -------
    values : ndarray, shape (..., n)
        Real eigenvalues, sorted descending.
    vectors : ndarray, shape (..., n, n)
        Unitary matrix whose columns are the matching eigenvectors.
    """
    m = hermitianize(m)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericalError(f"eigendecomposition did not converge: {exc}") from exc
    # LAPACK returns ascending order
    return w[..., ::-1], v[..., ::-1]


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Descending eigenvalues of a Hermitian matrix (no eigenvectors)."""
    m = hermitianize(m)
    try:
        w = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NumericalError(f"eigendecomposition did not converge: {exc}") from exc
    return w[..., ::-1]


def matrix_sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in [-PSD_TOL, 0) are clamped to zero; anything below
    -PSD_TOL raises :class:`NotPositiveSemidefiniteError`.
    """
    w, v = hermitian_eigensystem(m)
    if np.min(w) < -PSD_TOL:
        raise NotPositiveSemidefiniteError(
            f"matrix has eigenvalue {np.min(w):.3e} below -{PSD_TOL:.0e}"
        )
    w = np.clip(w, 0.0, None)
    vh = np.conj(np.swapaxes(v, -1, -2))
    return (v * np.sqrt(w)[..., None, :]) @ vh


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two square matrices."""
    return np.kron(_require_square(a), _require_square(b))


def haar_unitary(n: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Draw unitaries from the Haar measure on U(n).

    QR-decomposes a complex Ginibre matrix and fixes the phases of R's
    diagonal; without the phase correction plain QR is not Haar.

    Parameters
    ----------
    n : int
        Matrix dimension, >= 1.
    rng : numpy Generator
        Source of randomness; the caller owns the stream.
    size : int, optional
        If given, return a stack of `size` independent draws, shape
        (size, n, n).
    """
    if n < 1:
        raise DimensionError(f"unitary dimension must be >= 1, got {n}")
    shape = (n, n) if size is None else (size, n, n)
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    q, r = np.linalg.qr(z)
    diag = np.einsum("...ii->...i", r)
    phases = diag / np.abs(diag)
    return q * phases[..., None, :]


def _flat_simplex(n: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Unsorted points uniform on the probability simplex (flat Dirichlet)."""
    shape = (n,) if size is None else (size, n)
    x = rng.standard_exponential(shape)
    return x / x.sum(axis=-1, keepdims=True)


def sample_simplex(n: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Draw from the normalized Lebesgue measure on the (n-1)-simplex.

    Draws n i.i.d. unit exponentials and normalizes by their sum, which
    realizes the flat Dirichlet distribution exactly. Returned sorted
    descending.
    """
    if n < 1:
        raise DimensionError(f"simplex dimension must be >= 1, got {n}")
    x = _flat_simplex(n, rng, size)
    return np.sort(x, axis=-1)[..., ::-1]
