"""Canonical elements of parabolic subalgebras of so(n), in exact arithmetic.

The package decides which conjugacy classes of so(n) grade a parabolic
subalgebra of so(n, C) canonically, constructs the parabolic with its
nilradical and descending series, enumerates all canonical classes, and
cross-validates the generation-based decision procedure against the
closed-form spectral classification.  Every computation is exact over the
rationals; there is no floating point anywhere.
"""

from .exactlin import (
    RatMatrix,
    Rational,
    Subspace,
    contains,
    kernel,
    parse_rational,
    rref,
    span,
    subspace_intersect,
    subspace_sum,
)
from .liegraded import (
    AntisymmetryViolation,
    DegenerateForm,
    FormNotInvariant,
    GradingMap,
    GradingViolation,
    JacobiViolation,
    LieTable,
    LieTableError,
    bracket_spaces,
    build_table,
    descending_series,
    direct_sum,
    generated_subalgebra,
    grading_of,
    polar,
)
from .sonreal import (
    InvalidSpectrum,
    NotSkew,
    Spectrum,
    TooSmall,
    WedgeBasis,
    matrix_of,
    normal_form,
    realize,
    spectrum_from_matrix,
    wedge_basis,
)
from .canonical import (
    NotCanonical,
    OracleRecord,
    ParabolicData,
    Verdict,
    VerdictReason,
    check_matrix,
    condition1,
    enumerate_canonical,
    half_integral_spectra,
    oracle_record,
    parabolic_of,
    prop3_check,
    strict_generation_check,
    strict_generation_report,
    theorem1_report,
    theorem2_check,
    verify_theorem1,
)

__version__ = "0.1.0"

__all__ = [
    "AntisymmetryViolation",
    "DegenerateForm",
    "FormNotInvariant",
    "GradingMap",
    "GradingViolation",
    "InvalidSpectrum",
    "JacobiViolation",
    "LieTable",
    "LieTableError",
    "NotCanonical",
    "NotSkew",
    "OracleRecord",
    "ParabolicData",
    "RatMatrix",
    "Rational",
    "Spectrum",
    "Subspace",
    "TooSmall",
    "Verdict",
    "VerdictReason",
    "WedgeBasis",
    "bracket_spaces",
    "build_table",
    "check_matrix",
    "condition1",
    "contains",
    "descending_series",
    "direct_sum",
    "enumerate_canonical",
    "generated_subalgebra",
    "grading_of",
    "half_integral_spectra",
    "kernel",
    "matrix_of",
    "normal_form",
    "oracle_record",
    "parabolic_of",
    "parse_rational",
    "polar",
    "prop3_check",
    "realize",
    "rref",
    "span",
    "spectrum_from_matrix",
    "strict_generation_check",
    "strict_generation_report",
    "subspace_intersect",
    "subspace_sum",
    "theorem1_report",
    "theorem2_check",
    "verify_theorem1",
    "wedge_basis",
]
