"""Geometric edit distance between point sequences.

Point sequences are array-likes of shape (n, d). Matchings are lists of
1-based (i, j) pairs.
"""

from ._core import (
    GedResult,
    InvalidMatching,
    SuccessInfo,
    banded_ged,
    exact_ged,
    ged_alpha_approx,
    ged_sqrt_approx,
    matching_cost,
    sed_decide,
    validate_matching,
)

__all__ = [
    "GedResult",
    "InvalidMatching",
    "SuccessInfo",
    "banded_ged",
    "exact_ged",
    "ged_alpha_approx",
    "ged_sqrt_approx",
    "matching_cost",
    "sed_decide",
    "validate_matching",
]
