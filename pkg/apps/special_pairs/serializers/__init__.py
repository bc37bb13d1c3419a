"""
Special-pair certificate codec.
"""
from .certificate_serializer import PAIR_SEPARATOR, format_certificate, parse_certificate

__all__ = [
    'PAIR_SEPARATOR',
    'format_certificate',
    'parse_certificate',
]
