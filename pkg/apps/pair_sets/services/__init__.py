"""
Pair set services.

Generation of the recursive pair sets P_n, their infection axes and the
membership audit.
"""
from .cache_manager import PairSetCache
from .pair_set import (
    CASE_BOTH_NONTRIVIAL,
    CASE_Y_TRIVIAL,
    CASE_Z_TRIVIAL,
    PairSet,
    PairSetAudit,
    WordPair,
    audit_pair_set,
    axes,
    build_pair_set,
    generate_pair_set,
    successor_for_case,
    successors,
)

__all__ = [
    'PairSetCache',
    'CASE_BOTH_NONTRIVIAL',
    'CASE_Y_TRIVIAL',
    'CASE_Z_TRIVIAL',
    'PairSet',
    'PairSetAudit',
    'WordPair',
    'audit_pair_set',
    'axes',
    'build_pair_set',
    'generate_pair_set',
    'successor_for_case',
    'successors',
]
