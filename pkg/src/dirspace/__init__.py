"""Numerical probes for Hankel- and Cesaro-type operators on the Dirichlet space."""

from ._accel import backend, use_backend
from .coeffspace import (
    TaylorPoly,
    dirichlet_inner,
    evaluate,
    kernel_coeffs,
    normalized_kernel_coeffs,
    space_norm,
)
from .criteria import (
    ClassifyConfig,
    ClassReport,
    classify,
    dirichlet_membership,
    double_sum_ratio,
    rkt_probe,
    widom_profile,
    widom_tail,
)
from .measures import MeasureSpec, classify_measure, moment, moment_sequence
from .operators import (
    SectionMatrix,
    cesaro_apply,
    cesaro_rkt_norm,
    hankel_apply,
    section_matrix,
    symbol_value,
    tail_section_norm,
    top_singular_value,
)
from .stochastic import (
    DistTag,
    RngSpec,
    fourth_moment_exact_rademacher,
    fourth_moment_mc,
    random_tail_experiment,
    sample_symbol,
)
from .symbols import SymbolSeq

__version__ = "0.1.0"

__all__ = [
    "TaylorPoly",
    "SymbolSeq",
    "MeasureSpec",
    "SectionMatrix",
    "DistTag",
    "RngSpec",
    "ClassifyConfig",
    "ClassReport",
    "backend",
    "use_backend",
    "space_norm",
    "dirichlet_inner",
    "evaluate",
    "kernel_coeffs",
    "normalized_kernel_coeffs",
    "symbol_value",
    "hankel_apply",
    "cesaro_apply",
    "section_matrix",
    "top_singular_value",
    "tail_section_norm",
    "cesaro_rkt_norm",
    "widom_tail",
    "widom_profile",
    "classify",
    "rkt_probe",
    "dirichlet_membership",
    "double_sum_ratio",
    "moment",
    "moment_sequence",
    "classify_measure",
    "sample_symbol",
    "fourth_moment_exact_rademacher",
    "fourth_moment_mc",
    "random_tail_experiment",
    "__version__",
]
