"""Longest palindromic substring after a block edit.

Preprocess a text once with :class:`ELSPalIndex`, then ask for the longest
palindrome of ``T[1..i-1] + X + T[j+1..n]`` for any interval and any
replacement ``X`` without rebuilding anything::

    >>> from elspal import ELSPalIndex
    >>> idx = ELSPalIndex(b"abaab")
    >>> idx.query(3, 3, b"").length
    3
"""
from .group_index import build_group_index_all, find_g_k, find_w
from .oracle import OracleAnswer, naive_lspal, oracle_query
from .palindromes import (
    Group,
    MaximalPalindrome,
    build_palindrome_sets,
    compute_maximal_palindromes,
    longest_pal_in_every_prefix,
    longest_pal_in_every_suffix,
)
from .query_engine import (
    Counters,
    EditContext,
    ELSPalIndex,
    GroupExtensionParams,
    QueryAnswer,
    best_in_group,
    block_center_candidate,
    bound_violations,
    elspal_query,
    extended_candidate_begin,
    extended_candidate_end,
    group_params,
    normalize_edit,
    unchanged_shortened_candidate,
)
from .text_index import TextIndex, build_text_index, left_lce, out_lce, right_lce

__version__ = "0.1.0"

__all__ = [
    "Counters", "EditContext", "ELSPalIndex", "Group", "GroupExtensionParams",
    "MaximalPalindrome", "OracleAnswer", "QueryAnswer", "TextIndex",
    "best_in_group", "block_center_candidate", "bound_violations", "build_group_index_all",
    "build_palindrome_sets", "build_text_index", "compute_maximal_palindromes",
    "elspal_query", "extended_candidate_begin", "extended_candidate_end",
    "find_g_k", "find_w", "group_params", "left_lce",
    "longest_pal_in_every_prefix", "longest_pal_in_every_suffix",
    "naive_lspal", "normalize_edit", "oracle_query", "out_lce", "right_lce",
    "unchanged_shortened_candidate",
]
