"""Exact-arithmetic toolkit for extended generalized Roth-Lempel (EGRL) codes.

Builds EGRL generator and parity-check matrices over GF(q), decides the
MDS / dual-AMDS criteria by subset-sum counting, produces closed-form NMDS
weight distributions, and cross-validates every closed form against
brute-force enumeration at desk scale.
"""

from .field import (
    CompositeCharacteristic,
    CtxMismatch,
    FieldCtx,
    FieldElem,
    FieldError,
    NoPrimitive,
    NonMonic,
    ReducibleModulus,
    ZeroInverse,
)
from .matrix import (
    DimMismatch,
    DuplicateNodes,
    FieldMatrix,
    MatrixError,
    NotSquare,
    ZeroScale,
    vandermonde_skip_det,
)
from .subsetsum import (
    FULL,
    STAR,
    DomainSize,
    OutOfStatedRange,
    SubsetSumError,
    count_dp,
    count_li_wan,
    find_subset,
    vanishes,
)
from .linear import (
    AMDS,
    AMDS_NOT_NMDS,
    DEFAULT_BUDGET,
    MDS,
    NMDS,
    OTHER,
    BudgetExceeded,
    CodeClass,
    CodeError,
    InconsistentInput,
    LinearCode,
    NegativeCount,
    WeightDistribution,
    ZeroCode,
    macwilliams,
    nmds_distribution,
)
from .construction import (
    DuplicateAlpha,
    EgrlParams,
    InvalidParams,
    MdsReport,
    RangeViolation,
    SingularM,
    UnsupportedShape,
    ZeroB,
    ZeroV,
    check_dual_amds,
    check_mds,
    compute_u,
    dual_min_weight_count,
    dual_support_pattern_census,
    egrl_code,
    generator_matrix,
    is_special_instance,
    parity_check_matrix,
    special_construction,
    special_nmds_distribution,
)

__version__ = "0.1.0"
