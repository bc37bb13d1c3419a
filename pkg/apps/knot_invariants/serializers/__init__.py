"""
Seifert matrix and signature codecs.
"""
from .seifert_serializer import format_seifert, parse_seifert
from .signature_serializer import CSV_HEADER, format_rho, format_samples_csv

__all__ = [
    'format_seifert',
    'parse_seifert',
    'CSV_HEADER',
    'format_rho',
    'format_samples_csv',
]
