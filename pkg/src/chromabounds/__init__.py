"""Exact chromatic and characteristic polynomials with coefficient bounds.

Everything computes over arbitrary-precision integers and rationals; no
floating point is used anywhere.
"""

from .arrangements import (
    Arrangement,
    Flat,
    Hyperplane,
    IntersectionPoset,
    boolean_char_poly,
    char_poly,
    char_poly_whitney,
    decone,
    delete,
    essentialize,
    flat_of,
    general_position_char_poly,
    graphic_arrangement,
    intersection_poset,
    is_boolean,
    is_central,
    is_general_position,
    rank,
    restrict,
)
from .bounds import (
    BoundsRecord,
    BoundsReport,
    CoeffSequence,
    ForestEquivalence,
    LowerBoundReport,
    check_coefficient_lower_bounds,
    coeff_sequence,
    divided_difference,
    divided_difference_formula,
    divided_difference_iter,
    forest_equivalence,
    is_logconcave,
    partial_binomial_sum,
    partial_sum_bounds,
    verify_bounds,
)
from .errors import CoeffSequenceError, InputError, InvariantError, ResourceLimitError
from .exactmath import IntPolynomial, binom, vandermonde_sum
from .graphs import (
    GraphRankInfo,
    SimpleGraph,
    chromatic_poly,
    chromatic_poly_interpolated,
    complete,
    complete_bipartite,
    contract_edge,
    count_colorings,
    cycle,
    delete_edge,
    is_forest,
    path,
    rank_info,
)
from .nbc import broken_circuits, circuits, default_order, is_dependent, nbc_coefficient

__all__ = [
    "Arrangement",
    "BoundsRecord",
    "BoundsReport",
    "CoeffSequence",
    "CoeffSequenceError",
    "Flat",
    "ForestEquivalence",
    "GraphRankInfo",
    "Hyperplane",
    "InputError",
    "IntersectionPoset",
    "IntPolynomial",
    "InvariantError",
    "LowerBoundReport",
    "ResourceLimitError",
    "SimpleGraph",
    "binom",
    "boolean_char_poly",
    "broken_circuits",
    "char_poly",
    "char_poly_whitney",
    "check_coefficient_lower_bounds",
    "chromatic_poly",
    "chromatic_poly_interpolated",
    "circuits",
    "coeff_sequence",
    "complete",
    "complete_bipartite",
    "contract_edge",
    "count_colorings",
    "cycle",
    "decone",
    "default_order",
    "delete",
    "delete_edge",
    "divided_difference",
    "divided_difference_formula",
    "divided_difference_iter",
    "essentialize",
    "flat_of",
    "forest_equivalence",
    "general_position_char_poly",
    "graphic_arrangement",
    "intersection_poset",
    "is_boolean",
    "is_central",
    "is_dependent",
    "is_forest",
    "is_general_position",
    "is_logconcave",
    "nbc_coefficient",
    "partial_binomial_sum",
    "partial_sum_bounds",
    "path",
    "rank",
    "rank_info",
    "restrict",
    "verify_bounds",
]
