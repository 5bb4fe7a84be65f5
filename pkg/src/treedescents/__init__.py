"""Exact descent polynomials of rooted plane forests.

The k-th coefficient of a forest's descent polynomial counts the labelings
with exactly k descents (non-root vertices labeled above their parent).
Three independent engines compute it: exhaustive labeling sweeps, the
vertex-deletion recurrence, and a rank-refined dynamic program that scales
to trees with hundreds of vertices. On top sit coefficient-sequence
checks (symmetry, unimodality, log-concavity), exact moments, and
normality diagnostics for the descent statistic.
"""

from .cltscan import NormalityReport, ScanRow, clt_scan
from .descents import (
    MemoStore,
    brute_force_poly,
    complement_labeling,
    descent_count,
    descent_set,
    poly_by_deletion,
)
from .enumeration import enumerate_rooted_trees
from .errors import InputError, ResourceLimitError
from .families import (
    TreeFamilySpec,
    broom_tree,
    caterpillar_tree,
    complete_dary_tree,
    generate_family,
    parse_family,
    path_tree,
    random_labeled_tree,
    star_tree,
)
from .forest import (
    RootedForest,
    SimpleGraph,
    canonical_code,
    delete_vertex,
    down_degree,
    line_graph,
    max_degree,
    max_down_degree,
    parse_nested,
    parse_parent_array,
    serialize_nested,
    serialize_parent_array,
)
from .kernels import BACKEND
from .polynomial import (
    DescentPolynomial,
    forest_product,
    is_log_concave,
    is_symmetric,
    is_unimodal,
    log_concavity_violation,
    symmetric_unimodal_product_check,
    symmetry_violation,
    unimodality_violation,
)
from .ranktable import RankDescentTable, descent_poly, poly_by_rank_dp
from .stats import (
    DescentPMF,
    MomentSummary,
    PairTally,
    SampleRun,
    closed_form_moments,
    exact_pmf,
    janson_quantity,
    ks_distance_to_normal,
    moments_from_poly,
    normal_cdf,
    pairwise_edge_expectations,
    sample_descents,
    tv_distance,
    tv_to_binned_normal,
    variance_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DescentPMF",
    "DescentPolynomial",
    "InputError",
    "MemoStore",
    "MomentSummary",
    "NormalityReport",
    "PairTally",
    "RankDescentTable",
    "ResourceLimitError",
    "RootedForest",
    "SampleRun",
    "ScanRow",
    "SimpleGraph",
    "TreeFamilySpec",
    "broom_tree",
    "brute_force_poly",
    "canonical_code",
    "caterpillar_tree",
    "closed_form_moments",
    "clt_scan",
    "complement_labeling",
    "complete_dary_tree",
    "delete_vertex",
    "descent_count",
    "descent_poly",
    "descent_set",
    "down_degree",
    "enumerate_rooted_trees",
    "exact_pmf",
    "forest_product",
    "generate_family",
    "is_log_concave",
    "is_symmetric",
    "is_unimodal",
    "janson_quantity",
    "ks_distance_to_normal",
    "line_graph",
    "log_concavity_violation",
    "max_degree",
    "max_down_degree",
    "moments_from_poly",
    "normal_cdf",
    "pairwise_edge_expectations",
    "parse_family",
    "parse_nested",
    "parse_parent_array",
    "path_tree",
    "poly_by_deletion",
    "poly_by_rank_dp",
    "random_labeled_tree",
    "sample_descents",
    "serialize_nested",
    "serialize_parent_array",
    "star_tree",
    "symmetric_unimodal_product_check",
    "symmetry_violation",
    "tv_distance",
    "tv_to_binned_normal",
    "unimodality_violation",
    "variance_lower_bound",
]
