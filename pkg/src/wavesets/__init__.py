"""Exact wavelet-set calculus, operator-theoretic interpolation maps, and
finite-dimensional frame decompositions."""

from .pisets import (
    EMPTY,
    Interval,
    PiRational,
    PiSet,
    dilate,
    intersect,
    measure,
    normalize,
    pi_mult,
    piset,
    subtract,
    symmetric_difference,
    translate,
    union,
)
from .congruence import (
    LITTLEWOOD_PALEY,
    TWO_PI_INTERVAL,
    DilationWitness,
    FailureReason,
    TranslationWitness,
    WaveletVerdict,
    dilation_congruent,
    is_dilation_generator,
    is_spectral_for_Z,
    is_translation_generator,
    is_wavelet_set,
    translation_congruent,
)
from .families import (
    d_dilation_set,
    journe,
    journe_path,
    shannon,
    shannon_path,
    subset_extension,
)
from .symbols import (
    DilationPeriodicFunction,
    FrequencySymbol,
    coset_power_profile,
    dpf_constant,
    eval_dpf,
    msf_symbol,
)
from .interpolation import (
    CoefficientFamily,
    InterpolationMap,
    build_sigma,
    check_measure_preserving,
    coefficient_criterion,
    coefficient_criterion_report,
    compose,
    conjugate_multiplier,
    eval_sigma,
    identity_map,
    interpolated_symbol,
    inverse,
    power_congruence,
    torsion_order,
)
from .analysis import (
    GramWindow,
    eval_haar,
    gram_window,
    inner_product,
    phase_modulate,
    time_samples,
)
from .jacobi import hermitian_eig, hermitian_eigenvalues
from .unitary_lab import (
    OperatorSubspaceBasis,
    UnitarySystem,
    commutant,
    cyclic_group_table,
    interpolation_pair_test,
    interpolation_unitary,
    is_complete_wandering_vector,
    is_multiplicative_semigroup,
    is_wandering_vector,
    local_commutant,
    parseval_frame_vector_check,
    regular_representation,
    riesz_combination_check,
)
from .frames import (
    InfeasibleWeightsError,
    RankOneDecomposition,
    etf_construct,
    frame_bounds,
    frame_operator,
    is_frame,
    is_parseval,
    majorization_check,
    multiplex_roundtrip,
    naimark_complement,
    projection_decomposition,
    strongly_disjoint,
    weighted_decomposition,
)

__version__ = "0.1.0"
