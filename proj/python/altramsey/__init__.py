"""Exact Ramsey witnesses for alternating bilinear maps over prime fields."""

from ._core import (
    AltRamseyError,
    AltSpace,
    FieldCtx,
    Hypergraph,
    baer_check,
    check_prop_alpha,
    complete_number_exact,
    count_subspaces,
    free_group_order,
    gen_bgh,
    gen_uniform,
    isotropic_number_exact,
    min_degree_exact,
    parse_instance,
    solve,
    verify,
)

__all__ = [
    "AltRamseyError",
    "AltSpace",
    "FieldCtx",
    "Hypergraph",
    "baer_check",
    "check_prop_alpha",
    "complete_number_exact",
    "count_subspaces",
    "free_group_order",
    "gen_bgh",
    "gen_uniform",
    "isotropic_number_exact",
    "min_degree_exact",
    "parse_instance",
    "solve",
    "verify",
]
