"""Monte Carlo surveys of entropic separability criteria on random mixed states.

Samples bipartite density matrices from the Haar x flat-simplex product
measure, classifies each state by the sign of its conditional q-entropies
and by the Peres partial-transpose test, and aggregates the results into
probability curves, global coincidence estimates, and dimension scans.
"""

__version__ = "0.1.0"

from .entanglement import ConcurrenceResult, concurrence, spin_flip
from .entropy import (
    INFINITY,
    VON_NEUMANN,
    ConditionalSignReport,
    EntropicParameter,
    conditional_sign_report,
    conditional_tsallis,
    omega_q,
    renyi,
    tsallis,
    tsallis_from_renyi,
)
from .linalg import haar_unitary, hermitian_eigensystem, kron, matrix_sqrt_psd, sample_simplex
from .separability import Classification, classify, entropic_positive, is_ppt
from .states import (
    BipartiteDims,
    DensityMatrix,
    bell_psi_minus,
    lambda_max,
    maximally_mixed,
    partial_trace,
    partial_transpose,
    participation_ratio,
    product_state,
    sample_mixed_state,
    sample_pure_state,
    werner_state,
)
from .survey import (
    BinCurve,
    CurveMinimum,
    DimScanPoint,
    GlobalPoint,
    SamplePoints,
    ScatterPoint,
    SurveyConfig,
    run_c2_scatter,
    run_coincidence_curve,
    run_dimension_scan,
    run_global_coincidence_vs_q,
    run_positive_volume_curve,
    sample_points,
)

__all__ = [
    "BinCurve",
    "BipartiteDims",
    "Classification",
    "ConcurrenceResult",
    "ConditionalSignReport",
    "CurveMinimum",
    "DensityMatrix",
    "DimScanPoint",
    "EntropicParameter",
    "GlobalPoint",
    "INFINITY",
    "SamplePoints",
    "ScatterPoint",
    "SurveyConfig",
    "VON_NEUMANN",
    "bell_psi_minus",
    "classify",
    "concurrence",
    "conditional_sign_report",
    "conditional_tsallis",
    "entropic_positive",
    "haar_unitary",
    "hermitian_eigensystem",
    "is_ppt",
    "kron",
    "lambda_max",
    "matrix_sqrt_psd",
    "maximally_mixed",
    "omega_q",
    "partial_trace",
    "partial_transpose",
    "participation_ratio",
    "product_state",
    "renyi",
    "run_c2_scatter",
    "run_coincidence_curve",
    "run_dimension_scan",
    "run_global_coincidence_vs_q",
    "run_positive_volume_curve",
    "sample_mixed_state",
    "sample_points",
    "sample_pure_state",
    "sample_simplex",
    "spin_flip",
    "tsallis",
    "tsallis_from_renyi",
    "werner_state",
]
