"""Domination ratios of integer distance digraphs and circulant domination numbers."""

from ._core import (
    ConsistencyError,
    __version__,
    consistency_check,
    construct_best,
    decompose,
    domination_ratio,
    eds_exists_family,
    gamma_bruteforce,
    gamma_exact,
    perfect_code,
    search_ratio,
    verify_dominating,
    verify_efficient,
)

__all__ = [
    "ConsistencyError",
    "__version__",
    "consistency_check",
    "construct_best",
    "decompose",
    "domination_ratio",
    "eds_exists_family",
    "gamma_bruteforce",
    "gamma_exact",
    "perfect_code",
    "search_ratio",
    "verify_dominating",
    "verify_efficient",
]
