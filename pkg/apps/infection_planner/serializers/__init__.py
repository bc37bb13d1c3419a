"""
Plan file codec.
"""
from .plan_serializer import format_plan, parse_plan

__all__ = [
    'format_plan',
    'parse_plan',
]
