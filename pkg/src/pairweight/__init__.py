"""pairweight: exact symbol-pair weight distributions of two-nonzero
reducible cyclic codes, with cyclotomic-number and Gaussian-period machinery
and closed-form verification by exhaustive enumeration."""

from .errors import BudgetError, NotApplicableError, ParameterError
from .field import (
    DEFAULT_TABLE_CAP,
    ZERO,
    FieldCtx,
    FieldElement,
    build_field,
    find_primitive_modulus,
)
from .cyclotomy import (
    class_of,
    class_size,
    check_multiset_scaling,
    check_subfield_containment,
    cyclotomic_number,
    gaussian_period_closed_form_n2,
    gaussian_period_numeric,
    generalized_cyclotomic_number,
    generalized_cyclotomic_table,
)
from .paircode import (
    DEFAULT_BUDGET,
    CodeParams,
    Codeword,
    EnumerationSummary,
    PuncturedCode,
    Regime,
    WeightDistribution,
    check_pair_identity,
    codeword,
    dimension,
    dimension_from_distribution,
    enumerate_code,
    hamming_weight,
    hamming_weight_distribution,
    is_mds_symbol_pair,
    make_params,
    pair_weight_distribution,
    puncture_half,
    symbol_pair_weight,
    t_count,
    t_value_distribution,
)
from .verify import (
    CheckResult,
    VerificationReport,
    even_class_square_counts,
    predict_pair_distribution_coprime,
    predict_pair_distribution_m2,
    predict_possible_pair_weights,
    predict_t_distribution_coprime,
    verify_all,
)

__version__ = "0.1.0"
