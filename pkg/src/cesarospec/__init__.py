"""Computational spectral theory of the discrete averaging operator.

The package builds exact finite truncations of the running-mean matrix and
its relatives on power-series sequence spaces, decides every finitely
checkable growth criterion for the generating exponent sequence (nuclearity,
shift stability, continuity and compactness of the operator, convergence
exponents), verifies eigenpairs and resolvents against closed formulas, and
simulates iterate and ergodic dynamics.  Every numerical judgement is a
three-state Verdict carrying its evidence, never a bare boolean.
"""

from .criteria import (
    GALLERY_SPECS,
    SpaceProfile,
    banach_step_compactness,
    classify_space,
    d_continuity_check,
    delta_continuity_check,
    echelon_weights,
    gallery,
    inverse_continuity_check,
    koethe_continuity_check,
    koethe_continuity_scan,
    noncompactness_witness,
)
from .dynamics import (
    CesaroMeansTrace,
    IterateTrace,
    QuadSpec,
    cesaro_means,
    ergodic_decomposition_check,
    gm_sup,
    iterate_limit_check,
    iterate_via_kernel,
    kernel_matrix,
    power_bound_check,
    power_iterate,
)
from .errors import (
    CesaroError,
    InternalConsistencyError,
    PreconditionError,
    QuadratureError,
    RepresentationError,
    SkEmptyError,
)
from .exact import ComplexRational, compare_seminorms, parse_complex_rational
from .operators import (
    CoordinateVector,
    TruncOperator,
    a_matrix,
    b_matrix,
    basis_vector,
    cesaro,
    cesaro_apply,
    cesaro_inverse_apply,
    delta,
    delta_eigenvector,
    differentiation_apply,
    identity,
    ops_equal_exact,
    resolvent,
    resolvent_tail_logs,
    scaled_e_matrix,
)
from .sequences import (
    AlphaSequence,
    SZeroEstimate,
    WeightSystem,
    n_over_alpha_check,
    nuclearity_check,
    parse_alpha,
    s0_estimate,
    seminorm,
    shift_stability_check,
    sk_convergence,
    v_alpha,
)
from .spectral import (
    DiscReport,
    SetDescriptor,
    SpectrumReport,
    boun_bounds_fit,
    disc_report,
    eigenvector_membership,
    predict_spectra,
    resolvent_point_profile,
    verify_resolvent_point,
)
from .trend import FAILS, HOLDS, INCONCLUSIVE, Verdict

__version__ = "0.1.0"

__all__ = [
    "AlphaSequence",
    "CesaroError",
    "CesaroMeansTrace",
    "ComplexRational",
    "CoordinateVector",
    "DiscReport",
    "FAILS",
    "GALLERY_SPECS",
    "HOLDS",
    "INCONCLUSIVE",
    "InternalConsistencyError",
    "IterateTrace",
    "PreconditionError",
    "QuadSpec",
    "QuadratureError",
    "RepresentationError",
    "SZeroEstimate",
    "SetDescriptor",
    "SkEmptyError",
    "SpaceProfile",
    "SpectrumReport",
    "TruncOperator",
    "Verdict",
    "WeightSystem",
    "a_matrix",
    "b_matrix",
    "banach_step_compactness",
    "basis_vector",
    "boun_bounds_fit",
    "cesaro",
    "cesaro_apply",
    "cesaro_inverse_apply",
    "cesaro_means",
    "classify_space",
    "compare_seminorms",
    "d_continuity_check",
    "delta",
    "delta_continuity_check",
    "delta_eigenvector",
    "differentiation_apply",
    "disc_report",
    "echelon_weights",
    "eigenvector_membership",
    "ergodic_decomposition_check",
    "gallery",
    "gm_sup",
    "identity",
    "inverse_continuity_check",
    "iterate_limit_check",
    "iterate_via_kernel",
    "kernel_matrix",
    "koethe_continuity_check",
    "koethe_continuity_scan",
    "n_over_alpha_check",
    "noncompactness_witness",
    "nuclearity_check",
    "ops_equal_exact",
    "parse_alpha",
    "parse_complex_rational",
    "power_bound_check",
    "power_iterate",
    "predict_spectra",
    "resolvent",
    "resolvent_point_profile",
    "resolvent_tail_logs",
    "s0_estimate",
    "scaled_e_matrix",
    "seminorm",
    "sk_convergence",
    "shift_stability_check",
    "v_alpha",
    "verify_resolvent_point",
]
