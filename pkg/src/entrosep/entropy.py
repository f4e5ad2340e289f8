"""The q-entropy family and conditional q-entropies.

Spectrum arguments are probability vectors (or stacks of them, shape
``(..., n)``); entropies are in nats. ``renyi`` handles the q = 1
(von Neumann) and q -> infinity limits as explicit variants rather than
by approximation with finite q.

The literature uses "relative" and "conditional" interchangeably for the
quotient form implemented by :func:`conditional_tsallis`; identifiers here
say "conditional".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .linalg import hermitian_eigenvalues
from .states import DensityMatrix, _partial_trace_array

# |delta| <= SIGN_TOL counts as non-negative: the separable boundary is
# measure-zero and round-off must not flip classifications.
SIGN_TOL = 1e-12

_Q_ONE_TOL = 1e-12


@dataclass(frozen=True)
class EntropicParameter:
    """Entropic index: finite q > 0 (q != 1), the q = 1 limit, or q = infinity."""

    kind: str  # 'finite' | 'von_neumann' | 'infinity'
    q: float | None = None

    def __post_init__(self) -> None:
        if self.kind == "finite":
            if self.q is None or not np.isfinite(self.q) or self.q <= 0.0:
                raise ValueError(f"finite entropic parameter requires q > 0, got {self.q}")
            if abs(self.q - 1.0) <= _Q_ONE_TOL:
                raise ValueError("q = 1 must use the von Neumann variant")
        elif self.kind in ("von_neumann", "infinity"):
            if self.q is not None:
                raise ValueError(f"{self.kind} variant takes no q value")
        else:
            raise ValueError(f"unknown entropic parameter kind {self.kind!r}")

    @classmethod
    def finite(cls, q: float) -> "EntropicParameter":
        return cls("finite", float(q))

    @classmethod
    def von_neumann(cls) -> "EntropicParameter":
        return cls("von_neumann")

    @classmethod
    def infinity(cls) -> "EntropicParameter":
        return cls("infinity")

    @classmethod
    def parse(cls, token: str) -> "EntropicParameter":
        """Parse a CLI token: 'inf' (any case), '1', or a positive decimal."""
        token = token.strip()
        if token.lower() == "inf":
            return cls.infinity()
        try:
            q = float(token)
        except ValueError:
            raise ValueError(f"malformed entropic parameter token {token!r}") from None
        if not np.isfinite(q) or q <= 0.0:
            raise ValueError(f"entropic parameter must be positive and finite, got {token!r}")
        if abs(q - 1.0) <= _Q_ONE_TOL:
            return cls.von_neumann()
        return cls.finite(q)

    @property
    def token(self) -> str:
        """Canonical string form ('0.5', '1', 'inf'), used in CSV output."""
        if self.kind == "infinity":
            return "inf"
        if self.kind == "von_neumann":
            return "1"
        assert self.q is not None
        return f"{self.q:g}"


VON_NEUMANN = EntropicParameter.von_neumann()
INFINITY = EntropicParameter.infinity()


def _as_probabilities(s: np.ndarray) -> np.ndarray:
    # tolerate eigensolver round-off slightly below zero
    return np.clip(np.asarray(s, dtype=float), 0.0, None)


def _maybe_scalar(x: np.ndarray, was_1d: bool) -> float | np.ndarray:
    return float(x) if was_1d else x


def omega_q(s: np.ndarray, q: float) -> float | np.ndarray:
    """Spectral moment sum_i p_i^q (with 0^q = 0); always positive."""
    if q <= 0.0:
        raise ValueError(f"entropic index must be positive, got {q}")
    p = _as_probabilities(s)
    return _maybe_scalar(np.sum(p**q, axis=-1), p.ndim == 1)


def renyi(s: np.ndarray, p: EntropicParameter) -> float | np.ndarray:
    """Renyi q-entropy of a probability spectrum, in nats.

    Finite q uses ln(omega_q)/(1-q), evaluated in log space (largest
    eigenvalue factored out) so that large q does not underflow. q = 1 is
    the von Neumann entropy, q = infinity is -ln(max eigenvalue).
    """
    probs = _as_probabilities(s)
    was_1d = probs.ndim == 1
    lam_max = np.max(probs, axis=-1)
    if p.kind == "infinity":
        return _maybe_scalar(-np.log(lam_max), was_1d)
    if p.kind == "von_neumann":
        return _maybe_scalar(-np.sum(xlogy(probs, probs), axis=-1), was_1d)
    q = p.q
    scaled = probs / lam_max[..., None]
    log_omega = q * np.log(lam_max) + np.log(np.sum(scaled**q, axis=-1))
    return _maybe_scalar(log_omega / (1.0 - q), was_1d)


def tsallis(s: np.ndarray, q: float) -> float | np.ndarray:
    """Tsallis q-entropy (1 - omega_q)/(q - 1); q = 1 is rejected."""
    if abs(q - 1.0) <= _Q_ONE_TOL:
        raise ValueError("q = 1 is the von Neumann limit; use renyi(s, VON_NEUMANN)")
    return (1.0 - omega_q(s, q)) / (q - 1.0)


def tsallis_from_renyi(x: float | np.ndarray, q: float) -> float | np.ndarray:
    """The monotone link F(x) = (exp((1-q) x) - 1)/(1 - q) between the two families."""
    if abs(q - 1.0) <= _Q_ONE_TOL:
        raise ValueError("q = 1 has no finite-q link function")
    return (np.expm1((1.0 - q) * np.asarray(x, dtype=float))) / (1.0 - q)


def _marginal_spectra(rho: DensityMatrix) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    dims = rho._require_dims()
    spec_ab = rho.spectrum()
    spec_a = hermitian_eigenvalues(_partial_trace_array(rho.matrix, dims.n_a, dims.n_b, "A"))
    spec_b = hermitian_eigenvalues(_partial_trace_array(rho.matrix, dims.n_a, dims.n_b, "B"))
    return spec_ab, spec_a, spec_b


def conditional_tsallis(rho: DensityMatrix, conditioned_on: str, q: float) -> float:
    """Conditional Tsallis entropy S_q(A|B) (for conditioned_on='B') or S_q(B|A).

    Defined as [S_q(rho_AB) - S_q(rho_marginal)] / [1 + (1-q) S_q(rho_marginal)];
    the denominator equals omega_q of the marginal and is always positive, so
    the sign matches the plain Renyi difference.
    """
    if conditioned_on not in ("A", "B"):
        raise ValueError(f"subsystem selector must be 'A' or 'B', got {conditioned_on!r}")
    spec_ab, spec_a, spec_b = _marginal_spectra(rho)
    marginal = spec_b if conditioned_on == "B" else spec_a
    num = tsallis(spec_ab, q) - tsallis(marginal, q)
    return float(num / omega_q(marginal, q))


@dataclass(frozen=True)
class ConditionalSignReport:
    """Signs of both conditional q-entropies via the Renyi differences.

    delta_ab = S_q(rho_AB) - S_q(rho_B)  (the A|B side),
    delta_ba = S_q(rho_AB) - S_q(rho_A)  (the B|A side), in nats.
    """

    delta_ab: float
    delta_ba: float

    @property
    def both_nonnegative(self) -> bool:
        return min(self.delta_ab, self.delta_ba) >= -SIGN_TOL


def conditional_sign_report(rho: DensityMatrix, p: EntropicParameter) -> ConditionalSignReport:
    """Evaluate both conditional-entropy sign quantities for one state."""
    spec_ab, spec_a, spec_b = _marginal_spectra(rho)
    s_ab = renyi(spec_ab, p)
    return ConditionalSignReport(
        delta_ab=float(s_ab - renyi(spec_b, p)),
        delta_ba=float(s_ab - renyi(spec_a, p)),
    )
