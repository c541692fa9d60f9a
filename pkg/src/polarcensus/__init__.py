"""Exact counting and verification for finite polar spaces of rank at least 3.

The package computes, as exact integers, the number of totally singular
subspaces of each projective dimension in a finite polar space with orders
(s, ..., s, t), t^2 = s^e, together with the regular degrees of five natural
graphs on each layer: collinearity, hyperplane-meet, their union, their
intersection, and collinearity with maximal overlap.  A polynomial engine
certifies identities and eventual sign behaviour symbolically, an analysis
layer checks monotonicity claims and searches for count coincidences, and a
brute-force oracle enumerates small classical spaces to validate everything
against ground truth.
"""

from .analysis import (
    BoundReport,
    CoincidenceHit,
    ConjectureViolation,
    PropositionReport,
    Verdict,
    VerdictTables,
    compare_counts,
    grid_params,
    necessary_conditions,
    search_coincidences,
    search_conjecture,
    special_case_tables,
    verify_propositions,
)
from .census import Profile, count_rank, count_ratio, i_max, profile
from .degrees import (
    GraphKind,
    KappaDecomposition,
    degree,
    degree_chi,
    degree_kappa,
    degree_lambda,
    degree_mu,
    degree_nu,
    degree_xi,
    k_min,
    kappa_decomposition,
)
from .errors import PolarError
from .oracle import (
    FormSpace,
    Layer,
    SubspaceRep,
    build_space,
    cross_check,
    enumerate_subspaces,
    export_layer,
    measured_degree,
    relation,
)
from .params import PolarParams, half_log, top_order_for, validate_params
from .symbolic import (
    QPolynomial,
    SignVerdict,
    eventual_sign,
    poly_count,
    poly_degree,
    poly_equal,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CoincidenceHit",
    "ConjectureViolation",
    "FormSpace",
    "GraphKind",
    "KappaDecomposition",
    "Layer",
    "PolarError",
    "PolarParams",
    "Profile",
    "PropositionReport",
    "QPolynomial",
    "SignVerdict",
    "SubspaceRep",
    "Verdict",
    "VerdictTables",
    "build_space",
    "compare_counts",
    "count_rank",
    "count_ratio",
    "cross_check",
    "degree",
    "degree_chi",
    "degree_kappa",
    "degree_lambda",
    "degree_mu",
    "degree_nu",
    "degree_xi",
    "enumerate_subspaces",
    "eventual_sign",
    "export_layer",
    "grid_params",
    "half_log",
    "i_max",
    "k_min",
    "kappa_decomposition",
    "measured_degree",
    "necessary_conditions",
    "poly_count",
    "poly_degree",
    "poly_equal",
    "profile",
    "relation",
    "search_coincidences",
    "search_conjecture",
    "special_case_tables",
    "top_order_for",
    "validate_params",
    "verify_propositions",
]
