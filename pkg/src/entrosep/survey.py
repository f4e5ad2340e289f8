"""Monte Carlo surveys of the state space: curves, global probabilities, scans.

Sampling is split into fixed-size chunks; chunk ``i`` of a run draws from
the substream ``SeedSequence(seed, spawn_key=(stream, i))``, and results
are merged by summation in chunk order. The chunk layout depends only on
the configuration, so output is bit-identical for any worker count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .entanglement import _concurrence_squared_batch
from .entropy import INFINITY, SIGN_TOL, VON_NEUMANN, EntropicParameter, renyi
from .errors import DimensionError, ResourceLimitError
from .linalg import _flat_simplex, haar_unitary, hermitian_eigenvalues
from .separability import PPT_TOL
from .states import BipartiteDims, _partial_trace_array, _partial_transpose_array

AXIS_R = "R"
AXIS_LMAX = "lmax"

DEFAULT_BIN_COUNT = 60

# Grid for the coincidence-vs-q experiment; plotted against 1/q.
DEFAULT_Q_GRID: tuple[EntropicParameter, ...] = (
    VON_NEUMANN,
    EntropicParameter.finite(2.0),
    EntropicParameter.finite(2.5),
    EntropicParameter.finite(3.0),
    EntropicParameter.finite(4.0),
    EntropicParameter.finite(5.0),
    EntropicParameter.finite(6.67),
    EntropicParameter.finite(10.0),
    EntropicParameter.finite(20.0),
    INFINITY,
)


@dataclass(frozen=True)
class SurveyConfig:
    """Descriptor for one Monte Carlo experiment."""

    dims: BipartiteDims
    samples: int
    seed: int
    q_list: tuple[EntropicParameter, ...] = (VON_NEUMANN,)
    axis: str = AXIS_R
    bin_count: int = DEFAULT_BIN_COUNT
    workers: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "q_list", tuple(self.q_list))
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if self.bin_count < 2:
            raise ValueError(f"bin_count must be >= 2, got {self.bin_count}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.axis not in (AXIS_R, AXIS_LMAX):
            raise ValueError(f"axis must be '{AXIS_R}' or '{AXIS_LMAX}', got {self.axis!r}")
        if not self.q_list:
            raise ValueError("q_list must not be empty")


def axis_range(axis: str, total_dim: int) -> tuple[float, float]:
    """Bin-edge span: [1, N] for the participation ratio, [1/N, 1] for lambda_max."""
    if axis == AXIS_R:
        return 1.0, float(total_dim)
    if axis == AXIS_LMAX:
        return 1.0 / total_dim, 1.0
    raise ValueError(f"unknown axis {axis!r}")


@dataclass(frozen=True)
class BinCurve:
    """Binned conditional-probability estimates along a mixedness axis."""

    axis: str
    label: str  # q token, or "ppt" for the Peres reference curve
    q: EntropicParameter | None
    centers: np.ndarray
    n_total: np.ndarray
    n_event: np.ndarray

    @property
    def p(self) -> np.ndarray:
        """Event probability per bin; NaN marks empty bins."""
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(self.n_total > 0, self.n_event / self.n_total, np.nan)

    @property
    def std_err(self) -> np.ndarray:
        p = self.p
        with np.errstate(invalid="ignore"):
            return np.sqrt(p * (1.0 - p) / self.n_total)


@dataclass(frozen=True)
class CurveMinimum:
    """Location and value of the lowest non-empty bin of a coincidence curve."""

    label: str
    r_m: float
    p_m: float


@dataclass(frozen=True)
class GlobalPoint:
    """Global coincidence probability for one entropic parameter."""

    q: EntropicParameter
    p: float
    std_err: float
    n: int


@dataclass(frozen=True)
class DimScanPoint:
    """Global q=infinity entropic and PPT probabilities for one dimension pair."""

    dims: BipartiteDims
    p_entropic_inf: float
    se_entropic: float
    p_ppt: float
    se_ppt: float
    n: int


@dataclass(frozen=True)
class ScatterPoint:
    """One kept state of the concurrence-vs-violation scatter."""

    delta: float  # S_q(rho_A) - S_q(rho_AB) > 0 for kept states, nats
    c_squared: float


@dataclass(frozen=True)
class SamplePoints:
    """Per-state survey statistics, kept in sampling order."""

    dims: BipartiteDims
    q_list: tuple[EntropicParameter, ...]
    r: np.ndarray
    lam_max: np.ndarray
    ppt: np.ndarray
    positive: dict[str, np.ndarray] = field(repr=False)  # token -> bool array


# ---------------------------------------------------------------------------
# Chunked sampling kernel
# ---------------------------------------------------------------------------


def _chunk_size(total_dim: int) -> int:
    # keep per-chunk working set of N x N complex batches around ~100 MB
    return min(65536, max(2048, (1 << 22) // (total_dim * total_dim)))


def _chunk_layout(samples: int, total_dim: int) -> list[tuple[int, int]]:
    size = _chunk_size(total_dim)
    layout = []
    start = 0
    index = 0
    while start < samples:
        count = min(size, samples - start)
        layout.append((index, count))
        start += count
        index += 1
    return layout


def _chunk_stats(
    n_a: int,
    n_b: int,
    count: int,
    seed: int,
    stream: int,
    chunk_index: int,
    params: tuple[EntropicParameter, ...],
    with_c2: bool,
) -> dict[str, np.ndarray]:
    """Sample `count` states and evaluate all per-state statistics."""
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream, chunk_index)))
    n = n_a * n_b
    u = haar_unitary(n, rng, size=count)
    lam = _flat_simplex(n, rng, size=count)
    rho = (u * lam[:, None, :]) @ np.conj(np.swapaxes(u, 1, 2))

    spec_ab = np.clip(hermitian_eigenvalues(rho), 0.0, None)
    spec_a = np.clip(hermitian_eigenvalues(_partial_trace_array(rho, n_a, n_b, "A")), 0.0, None)
    spec_b = np.clip(hermitian_eigenvalues(_partial_trace_array(rho, n_a, n_b, "B")), 0.0, None)
    pt_min = hermitian_eigenvalues(_partial_transpose_array(rho, n_a, n_b, "B"))[:, -1]

    out: dict[str, np.ndarray] = {
        "r": 1.0 / np.sum(spec_ab**2, axis=1),
        "lmax": spec_ab[:, 0],
        "ppt": pt_min >= -PPT_TOL,
        "dab": np.empty((len(params), count)),
        "dba": np.empty((len(params), count)),
    }
    for i, p in enumerate(params):
        s_ab = renyi(spec_ab, p)
        out["dab"][i] = s_ab - renyi(spec_b, p)
        out["dba"][i] = s_ab - renyi(spec_a, p)
    if with_c2:
        out["c2"] = _concurrence_squared_batch(rho)
    return out


def _chunk_stats_task(args: tuple) -> dict[str, np.ndarray]:
    return _chunk_stats(*args)


def _map_chunks(
    dims: BipartiteDims,
    samples: int,
    seed: int,
    params: tuple[EntropicParameter, ...],
    workers: int,
    with_c2: bool = False,
    stream: int = 0,
) -> Iterator[dict[str, np.ndarray]]:
    """Yield chunk statistics in chunk order, serially or via a process pool."""
    tasks = [
        (dims.n_a, dims.n_b, count, seed, stream, index, params, with_c2)
        for index, count in _chunk_layout(samples, dims.total)
    ]
    if workers == 1 or len(tasks) == 1:
        for task in tasks:
            yield _chunk_stats_task(task)
    else:
        with Pool(processes=workers) as pool:
            yield from pool.imap(_chunk_stats_task, tasks)


def _positive_flags(chunk: dict[str, np.ndarray]) -> np.ndarray:
    """Bool array (n_params, count): both conditional entropies non-negative."""
    return (chunk["dab"] >= -SIGN_TOL) & (chunk["dba"] >= -SIGN_TOL)


# ---------------------------------------------------------------------------
# Survey operations
# ---------------------------------------------------------------------------


def sample_points(cfg: SurveyConfig) -> SamplePoints:
    """Collect per-state statistics (mixedness, PPT, entropic flags) for a run."""
    r_parts: list[np.ndarray] = []
    lmax_parts: list[np.ndarray] = []
    ppt_parts: list[np.ndarray] = []
    pos_parts: list[np.ndarray] = []
    for chunk in _map_chunks(cfg.dims, cfg.samples, cfg.seed, cfg.q_list, cfg.workers):
        r_parts.append(chunk["r"])
        lmax_parts.append(chunk["lmax"])
        ppt_parts.append(chunk["ppt"])
        pos_parts.append(_positive_flags(chunk))
    pos = np.concatenate(pos_parts, axis=1)
    return SamplePoints(
        dims=cfg.dims,
        q_list=cfg.q_list,
        r=np.concatenate(r_parts),
        lam_max=np.concatenate(lmax_parts),
        ppt=np.concatenate(ppt_parts),
        positive={p.token: pos[i] for i, p in enumerate(cfg.q_list)},
    )


def _bin_indices(values: np.ndarray, axis: str, total_dim: int, bins: int) -> np.ndarray:
    lo, hi = axis_range(axis, total_dim)
    idx = np.floor((values - lo) / (hi - lo) * bins).astype(np.int64)
    return np.clip(idx, 0, bins - 1)


def _bin_centers(axis: str, total_dim: int, bins: int) -> np.ndarray:
    lo, hi = axis_range(axis, total_dim)
    width = (hi - lo) / bins
    return lo + (np.arange(bins) + 0.5) * width


def _run_binned(cfg: SurveyConfig, events: Callable[[dict], list[np.ndarray]], labels: list[str]):
    """Shared accumulator for binned curves; one event mask list per chunk."""
    bins = cfg.bin_count
    n_total = np.zeros(bins, dtype=np.int64)
    n_event = np.zeros((len(labels), bins), dtype=np.int64)
    axis_key = "r" if cfg.axis == AXIS_R else "lmax"
    for chunk in _map_chunks(cfg.dims, cfg.samples, cfg.seed, cfg.q_list, cfg.workers):
        idx = _bin_indices(chunk[axis_key], cfg.axis, cfg.dims.total, bins)
        n_total += np.bincount(idx, minlength=bins)
        for k, mask in enumerate(events(chunk)):
            n_event[k] += np.bincount(idx[mask], minlength=bins)
    return n_total, n_event


def run_positive_volume_curve(cfg: SurveyConfig) -> list[BinCurve]:
    """Probability of positive conditional q-entropies per mixedness bin.

    Returns one curve per entry of ``cfg.q_list`` plus a final PPT
    reference curve, all computed from the same sampled states.
    """
    labels = [p.token for p in cfg.q_list] + ["ppt"]

    def events(chunk: dict) -> list[np.ndarray]:
        pos = _positive_flags(chunk)
        return [pos[i] for i in range(len(cfg.q_list))] + [chunk["ppt"]]

    n_total, n_event = _run_binned(cfg, events, labels)
    centers = _bin_centers(cfg.axis, cfg.dims.total, cfg.bin_count)
    qs: list[EntropicParameter | None] = list(cfg.q_list) + [None]
    return [
        BinCurve(cfg.axis, label, q, centers, n_total.copy(), n_event[k])
        for k, (label, q) in enumerate(zip(labels, qs))
    ]


def curve_minimum(curve: BinCurve) -> CurveMinimum:
    """Lowest non-empty bin of a curve (first such bin on ties)."""
    p = curve.p
    filled = ~np.isnan(p)
    if not np.any(filled):
        raise ValueError("curve has no non-empty bins")
    candidates = np.where(filled)[0]
    best = candidates[np.argmin(p[candidates])]
    return CurveMinimum(curve.label, float(curve.centers[best]), float(p[best]))


def run_coincidence_curve(cfg: SurveyConfig) -> tuple[list[BinCurve], list[CurveMinimum]]:
    """Probability that the entropic and Peres tests agree, per mixedness bin."""
    labels = [p.token for p in cfg.q_list]

    def events(chunk: dict) -> list[np.ndarray]:
        pos = _positive_flags(chunk)
        return [pos[i] == chunk["ppt"] for i in range(len(cfg.q_list))]

    n_total, n_event = _run_binned(cfg, events, labels)
    centers = _bin_centers(cfg.axis, cfg.dims.total, cfg.bin_count)
    curves = [
        BinCurve(cfg.axis, label, q, centers, n_total.copy(), n_event[k])
        for k, (label, q) in enumerate(zip(labels, cfg.q_list))
    ]
    return curves, [curve_minimum(c) for c in curves]


def run_global_coincidence_vs_q(
    cfg: SurveyConfig, q_grid: Sequence[EntropicParameter] | None = None
) -> list[GlobalPoint]:
    """Coincidence probability regardless of mixedness, one shared sample set.

    All grid points are evaluated on the same sampled states, so
    differences across q are not sampling noise.
    """
    params = tuple(q_grid) if q_grid is not None else DEFAULT_Q_GRID
    agree = np.zeros(len(params), dtype=np.int64)
    for chunk in _map_chunks(cfg.dims, cfg.samples, cfg.seed, params, cfg.workers):
        pos = _positive_flags(chunk)
        agree += np.sum(pos == chunk["ppt"][None, :], axis=1)
    n = cfg.samples
    points = []
    for i, p in enumerate(params):
        prob = float(agree[i] / n)
        points.append(GlobalPoint(p, prob, float(np.sqrt(prob * (1.0 - prob) / n)), n))
    return points


def run_dimension_scan(
    dim_pairs: Iterable[BipartiteDims],
    samples: int,
    seed: int,
    workers: int = 1,
    max_total_dim: int = 36,
) -> list[DimScanPoint]:
    """Global q=infinity entropic and PPT probabilities across dimension pairs."""
    pairs = list(dim_pairs)
    for dims in pairs:
        if dims.total > max_total_dim:
            raise ResourceLimitError(
                f"total dimension {dims.total} exceeds the budget of {max_total_dim}; "
                "raise max_total_dim to run this pair"
            )
    points = []
    params = (INFINITY,)
    for stream, dims in enumerate(pairs):
        n_pos = 0
        n_ppt = 0
        for chunk in _map_chunks(dims, samples, seed, params, workers, stream=stream):
            n_pos += int(np.sum(_positive_flags(chunk)[0]))
            n_ppt += int(np.sum(chunk["ppt"]))
        p_pos = n_pos / samples
        p_ppt = n_ppt / samples
        points.append(
            DimScanPoint(
                dims=dims,
                p_entropic_inf=p_pos,
                se_entropic=float(np.sqrt(p_pos * (1.0 - p_pos) / samples)),
                p_ppt=p_ppt,
                se_ppt=float(np.sqrt(p_ppt * (1.0 - p_ppt) / samples)),
                n=samples,
            )
        )
    return points


def run_c2_scatter(cfg: SurveyConfig, p: EntropicParameter) -> list[ScatterPoint]:
    """Concurrence squared versus the conditional-entropy violation.

    Samples two-qubit states and keeps those with
    S_q(rho_A) - S_q(rho_AB) > 1e-12, i.e. states violating the classical
    inequality on the B|A side; every kept state is entangled.
    """
    if (cfg.dims.n_a, cfg.dims.n_b) != (2, 2):
        raise DimensionError("the concurrence scatter is defined for 2x2 systems only")
    points: list[ScatterPoint] = []
    for chunk in _map_chunks(cfg.dims, cfg.samples, cfg.seed, (p,), cfg.workers, with_c2=True):
        delta = -chunk["dba"][0]  # S(rho_A) - S(rho_AB)
        keep = delta > SIGN_TOL
        for d, c2 in zip(delta[keep], chunk["c2"][keep]):
            points.append(ScatterPoint(float(d), float(c2)))
    return points
