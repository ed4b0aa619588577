"""Multigraded regularity on products of projective spaces.

Regions of regularity degrees, cohomology of twisted line bundles,
resolution-driven bounds for curves, and an exact scan that computes the
regularity region of a sheaf from a free presentation.
"""

from .bott import (
    CohomologyBasis,
    cohomology_basis,
    euler_chi_line,
    euler_chi_product,
    h_line,
    h_product,
    is_regular_twist_sum,
    level_types,
    regularity_offsets,
)
from .cohom import (
    DEFAULT_PRIME,
    RATIONALS,
    FieldConfig,
    FreePresentation,
    MultiPoly,
    PolyError,
    PresentationError,
    ScanResult,
    is_regular,
    kunneth_basis,
    matrix_rank,
    mult_matrix,
    parse_poly,
    regularity_scan,
    sheaf_cohomology_dim,
)
from .glp import (
    CurveData,
    ENShape,
    RegularityBound,
    aux_bundle_degree,
    aux_section_count,
    curve_regularity_bound,
    duple_embedding_bound,
    en_complex_shape,
    en_term_rank,
    source_ranks,
)
from .problemfile import Problem, ProblemError, ProblemOptions, load_problem, parse_problem
from .regions import (
    Ambient,
    DimensionMismatch,
    Region,
    as_vec,
    iter_weight_vectors,
    magnitude,
    twist_sum_region,
)
from .twistcx import (
    GrowthReport,
    LinearGrowthError,
    TwistComplex,
    complex_region_bound,
    leading_term_bound,
    linear_twist_growth,
    quotient_region_bound,
)

__version__ = "0.1.0"

__all__ = [
    "Ambient",
    "CohomologyBasis",
    "CurveData",
    "DEFAULT_PRIME",
    "DimensionMismatch",
    "ENShape",
    "FieldConfig",
    "FreePresentation",
    "GrowthReport",
    "LinearGrowthError",
    "MultiPoly",
    "PolyError",
    "PresentationError",
    "Problem",
    "ProblemError",
    "ProblemOptions",
    "RATIONALS",
    "Region",
    "RegularityBound",
    "ScanResult",
    "TwistComplex",
    "as_vec",
    "aux_bundle_degree",
    "aux_section_count",
    "cohomology_basis",
    "complex_region_bound",
    "curve_regularity_bound",
    "duple_embedding_bound",
    "en_complex_shape",
    "en_term_rank",
    "euler_chi_line",
    "euler_chi_product",
    "h_line",
    "h_product",
    "is_regular",
    "is_regular_twist_sum",
    "iter_weight_vectors",
    "kunneth_basis",
    "leading_term_bound",
    "level_types",
    "linear_twist_growth",
    "load_problem",
    "magnitude",
    "matrix_rank",
    "mult_matrix",
    "parse_poly",
    "parse_problem",
    "quotient_region_bound",
    "regularity_offsets",
    "regularity_scan",
    "sheaf_cohomology_dim",
    "source_ranks",
    "twist_sum_region",
    "__version__",
]
