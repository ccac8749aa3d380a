"""Exact census of spanning-tree isomorphism classes of K_{a,b}."""

from ._core import (
    BipartiteTree,
    BudgetExceeded,
    CodeOutOfRange,
    DimensionMismatch,
    DomainError,
    InvalidTree,
    NotMonotone,
    SumMismatch,
    UsageError,
    are_isomorphic,
    canonical_form,
    census_csv,
    census_json,
    census_table,
    code_at,
    construct_tree,
    count_partitions,
    decode,
    encode,
    enumerate_labeled,
    enumerate_partitions,
    exact_classes,
    kirchhoff_count,
    lower_bound,
    oracle_edge_subsets,
    realize_all_pairs,
    sample_uniform,
    scoins,
    upper_bound,
    upper_bound_lemma25,
    verify_corollaries,
)

__all__ = [name for name in dir() if not name.startswith("_")]
