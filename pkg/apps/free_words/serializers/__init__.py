"""
Word grammar codec.
"""
from .word_serializer import (
    IDENTITY_TEXT,
    format_pair,
    format_word,
    format_word_compact,
    parse_word,
    parse_word_list,
)

__all__ = [
    'IDENTITY_TEXT',
    'format_pair',
    'format_word',
    'format_word_compact',
    'parse_word',
    'parse_word_list',
]
