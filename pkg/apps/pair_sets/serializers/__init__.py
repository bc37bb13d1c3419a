"""
Pair-set file codec.
"""
from .pair_set_serializer import format_pair_set, parse_pair_set

__all__ = [
    'format_pair_set',
    'parse_pair_set',
]
