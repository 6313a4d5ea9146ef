"""Exact degrees of Fano schemes of linear subspaces on general hypersurfaces.

The main entry point is :func:`fano_degree_bott`; :func:`dm_degree` and
:func:`vdw_lines` are independent coefficient-extraction formulas used to
cross-check it.
"""
from .bott import (
    BottTerm,
    ProblemInstance,
    bott_sum,
    bott_terms,
    expected_dimension,
    fano_degree_bott,
    lines_on_hypersurface,
    p2_localization_identity,
    q_term,
    s_term,
    t_term,
)
from .combinatorics import binomial, enumerate_compositions, enumerate_index_sets
from .errors import (
    Disagreement,
    DistinctnessViolation,
    FanoError,
    HypothesisViolation,
    InternalError,
    InvalidArgument,
    NegativeDelta,
)
from .oracle import SparsePolynomial, dm_degree, poly_mul_truncated, vandermonde, vdw_lines
from .weights import random_weights, sequential_weights, validate

__version__ = "0.1.0"
