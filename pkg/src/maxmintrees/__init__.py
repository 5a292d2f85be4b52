"""
Maxmin trees: permutation weights, q-Eulerian polynomials, and the
two-kind partition triangle.

The library builds the max-weight maxmin tree and the minimum
decomposition tree of a permutation, computes the permutation weight by
five mutually checking routes, enumerates the symmetric group into exact
bivariate (descents, weight) polynomials, extracts their stabilized
coefficient series, and verifies the correspondence between
near-maximal-weight permutations and the two-kind partition counts
T(n, k) (OEIS A256193).
"""

__version__ = "0.1.0"

from .bijection import (
    Stem,
    bijection_report,
    stable_region,
    count_perms_by_weight,
    enumerate_stems,
    wide_region,
    stem_count,
    stem_to_partition,
    target_weight,
    verify_bijection,
    verify_stem_totals,
)
from .eulerian import (
    DEFAULT_MAX_N,
    BivariatePolynomial,
    LimitExceeded,
    WdSeries,
    check_stabilization,
    eulerian_polynomial,
    format_bivariate,
    maxwt,
    q_eulerian,
    stabilization_values,
    wd_coefficient,
    wd_series,
)
from .mindecomp import (
    MinDecompTree,
    build_min_decomp,
    classify,
    move_up,
    verify_injectivity,
    weight_via_leaves,
)
from .partitions import (
    CrosscheckReport,
    PartitionTriangle,
    crosscheck_triangle,
    enumerate_partitions,
    t_nk,
    t_nk_contributions,
    t_triangle,
)
from .perms import (
    descent_count,
    descent_positions,
    descent_values,
    extend,
    parse_permutation,
    validate_permutation,
)
from .trees import (
    BlockDecomposition,
    MaxminTree,
    build_max_weight_tree,
    decompose_blocks,
    is_maxmin,
    subtree,
    tree_descents,
    weight_recursive,
    weight_via_descent_sums,
)
from .weights import (
    SubtreeRange,
    descents_and_weight,
    subtree_range,
    weight_accelerated,
    weight_via_ranges,
)

__all__ = [
    "BivariatePolynomial",
    "BlockDecomposition",
    "CrosscheckReport",
    "DEFAULT_MAX_N",
    "LimitExceeded",
    "MaxminTree",
    "MinDecompTree",
    "PartitionTriangle",
    "Stem",
    "SubtreeRange",
    "WdSeries",
    "bijection_report",
    "stable_region",
    "build_max_weight_tree",
    "build_min_decomp",
    "check_stabilization",
    "classify",
    "count_perms_by_weight",
    "crosscheck_triangle",
    "decompose_blocks",
    "descent_count",
    "descent_positions",
    "descent_values",
    "descents_and_weight",
    "enumerate_partitions",
    "enumerate_stems",
    "eulerian_polynomial",
    "extend",
    "format_bivariate",
    "is_maxmin",
    "maxwt",
    "move_up",
    "parse_permutation",
    "wide_region",
    "q_eulerian",
    "stabilization_values",
    "stem_count",
    "stem_to_partition",
    "subtree",
    "subtree_range",
    "t_nk",
    "t_nk_contributions",
    "t_triangle",
    "target_weight",
    "tree_descents",
    "validate_permutation",
    "verify_bijection",
    "verify_injectivity",
    "verify_stem_totals",
    "wd_coefficient",
    "wd_series",
    "weight_accelerated",
    "weight_recursive",
    "weight_via_descent_sums",
    "weight_via_leaves",
    "weight_via_ranges",
]
