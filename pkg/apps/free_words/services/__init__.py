"""
Free group word services.

Exact arithmetic of freely reduced words in a free group of given rank.
"""
from .word import (
    DEFAULT_RANK,
    Generator,
    Word,
    abelianize,
    commutator,
    conjugate,
    exponent_sum,
    generator,
    identity,
    invert,
    multiply,
    power,
    random_word,
    reduce,
    substitute,
)

__all__ = [
    'DEFAULT_RANK',
    'Generator',
    'Word',
    'abelianize',
    'commutator',
    'conjugate',
    'exponent_sum',
    'generator',
    'identity',
    'invert',
    'multiply',
    'power',
    'random_word',
    'reduce',
    'substitute',
]
