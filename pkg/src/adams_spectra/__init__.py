"""Exact spectral theory of convolution powers on graded connected Hopf
algebras, computed from dimension data alone and cross-checked against a
structure-constant matrix model."""

__version__ = "0.1.0"

from .errors import (
    CacheMissError,
    DegreeOutOfRangeError,
    DomainError,
    HypothesisViolatedError,
    InvalidInputError,
    NonIntegralError,
    NonUnitConstantError,
    NotApplicableError,
    NotNilpotentError,
    NotRationalError,
    NotRealizableError,
    SeriesMismatchError,
    TooLargeError,
)
from .series import (
    RationalFunction,
    Series,
    euler_transform,
    inverse_euler_transform,
    one_series,
)
from .qlaurent import QLaurent
from .combinatorics import (
    WeightedAlphabet,
    palindrome_table,
    partition_statistics,
    weighted_compositions,
    witt_counts,
    word_counts,
)
from .spectra import (
    AntipodeSpectrum,
    DimensionProfile,
    SpectrumFactorization,
    antipode_trace_gf,
    char_poly_adams,
    char_poly_antipode,
    comp_power_char_poly,
    profile_preset,
    schur_indicator,
    trace_adams,
    trace_gf,
    trace_table,
)
from .cofree import (
    CofreeAntipodeSpectrum,
    QSpectrumFactorization,
    cofree_char_poly,
    cofree_trace,
    pal_gfs,
    q_char_poly,
    q_pal_gfs,
    q_trace,
)
from .species import (
    SpeciesProfile,
    assembly_trace,
    free_on_primitives,
    species_antipode_trace,
    species_char_poly,
    species_expmul,
    species_preset,
)
from .oracle import (
    GradedEndomorphism,
    HopfInstance,
    adams_endo,
    adams_matrix,
    antipode_endo,
    build_qsym_monomial,
    build_shuffle,
    build_sym_powersum,
    char_poly_exact,
    eulerian_idempotents,
    identity_conv_power,
    nilpotency_order,
    qsym_antipode_formula,
    shuffle_antipode_formula,
    sym_antipode_formula,
)
from .asymptotics import AsymptoticReport, asymptotic_ratio
from .oeis import OeisMatch, OeisRecord, load_record, oeis_check
from .verify import SUITE_NAMES, verify_all, verify_suite

__all__ = [
    "__version__",
    # errors
    "DomainError", "NonIntegralError", "NotRealizableError",
    "DegreeOutOfRangeError", "SeriesMismatchError", "NonUnitConstantError",
    "NotRationalError", "HypothesisViolatedError", "TooLargeError",
    "NotApplicableError", "NotNilpotentError", "CacheMissError",
    "InvalidInputError",
    # series
    "Series", "RationalFunction", "euler_transform",
    "inverse_euler_transform", "one_series", "QLaurent",
    # combinatorics
    "WeightedAlphabet", "palindrome_table", "partition_statistics",
    "weighted_compositions",
    "witt_counts", "word_counts",
    # spectra
    "DimensionProfile", "SpectrumFactorization", "AntipodeSpectrum",
    "profile_preset", "char_poly_adams", "char_poly_antipode",
    "comp_power_char_poly", "trace_adams", "trace_table", "schur_indicator",
    "trace_gf", "antipode_trace_gf",
    # cofree / q
    "CofreeAntipodeSpectrum", "QSpectrumFactorization", "cofree_char_poly",
    "cofree_trace", "pal_gfs", "q_char_poly", "q_pal_gfs", "q_trace",
    # species
    "SpeciesProfile", "species_preset", "free_on_primitives",
    "species_expmul", "species_char_poly", "species_antipode_trace",
    "assembly_trace",
    # oracle
    "HopfInstance", "GradedEndomorphism", "adams_endo", "antipode_endo",
    "identity_conv_power", "adams_matrix", "char_poly_exact",
    "nilpotency_order", "eulerian_idempotents", "build_shuffle",
    "build_sym_powersum", "build_qsym_monomial", "shuffle_antipode_formula",
    "sym_antipode_formula", "qsym_antipode_formula",
    # asymptotics
    "AsymptoticReport", "asymptotic_ratio",
    # oeis
    "OeisRecord", "OeisMatch", "load_record", "oeis_check",
    # verify
    "SUITE_NAMES", "verify_suite", "verify_all",
]
