"""
Fox calculus services.

Right-multiplied free differential calculus, group rings of the quotients
F/F^(k) and the membership test w ∈ F^(k).
"""
from .quotient import (
    INFINITY,
    QuotientElement,
    QuotientLevel,
    WordClassRegistry,
    as_level,
    class_key,
    derived_member,
    elements_equal,
)
from .group_ring import (
    GroupRingElement,
    augmentation,
    project,
    ring_add,
    ring_involute,
    ring_is_zero,
    ring_mul,
    ring_neg,
    ring_scale,
    ring_sub,
)
from .derivatives import FoxVector, fox_derivative, fox_vector, left_fox_derivative

__all__ = [
    'INFINITY',
    'QuotientElement',
    'QuotientLevel',
    'WordClassRegistry',
    'as_level',
    'class_key',
    'derived_member',
    'elements_equal',
    'GroupRingElement',
    'augmentation',
    'project',
    'ring_add',
    'ring_involute',
    'ring_is_zero',
    'ring_mul',
    'ring_neg',
    'ring_scale',
    'ring_sub',
    'FoxVector',
    'fox_derivative',
    'fox_vector',
    'left_fox_derivative',
]
