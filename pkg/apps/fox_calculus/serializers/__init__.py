"""
Group-ring text codec.
"""
from .ring_serializer import ZERO_TEXT, format_ring, parse_ring

__all__ = [
    'ZERO_TEXT',
    'format_ring',
    'parse_ring',
]
