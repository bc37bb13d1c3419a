"""
Text codec for group-ring elements.

Form: `3*[x1,x2] + -1*x3^-1`. Input accepts any word-grammar text after the
`*`; a term without `*` is either an integer (a multiple of the identity)
or a word with coefficient 1. Output expands every word canonically, sorts
terms by word order and prints `0` for the zero element; with compact=True
letter commutators print bracketed.
"""
import re
from typing import List

from apps.free_words.serializers import format_word, format_word_compact, parse_word
from apps.free_words.services import identity
from apps.fox_calculus.services.group_ring import GroupRingElement
from apps.fox_calculus.services.quotient import INFINITY, LevelLike
from utils.exceptions import InvalidWordError

ZERO_TEXT = '0'

_COEFFICIENT = re.compile(r'^\s*(-?\d+)\s*\*\s*(.+?)\s*$', re.S)
_INTEGER = re.compile(r'^\s*(-?\d+)\s*$')


def format_ring(a: GroupRingElement, compact: bool = False) -> str:
    if a.is_zero:
        return ZERO_TEXT
    render = format_word_compact if compact else format_word
    return ' + '.join(f"{c}*{render(w)}" for c, w in a.terms)


def _split_terms(text: str) -> List[str]:
    parts, depth, current = [], 0, []
    for char in text:
        if char in '[(':
            depth += 1
        elif char in '])':
            depth -= 1
        if char == '+' and depth == 0:
            parts.append(''.join(current))
            current = []
        else:
            current.append(char)
    parts.append(''.join(current))
    return parts


def parse_ring(text: str, rank: int = 4, level: LevelLike = INFINITY) -> GroupRingElement:
    """
    Parse group-ring text into an element at the given level.

    Raises:
        InvalidWordError: On malformed terms
    """
    if text is None or not text.strip():
        raise InvalidWordError("Empty group-ring text; use '0' for zero")
    if text.strip() == ZERO_TEXT:
        return GroupRingElement.zero(rank, level)
    terms = []
    for part in _split_terms(text):
        if not part.strip():
            raise InvalidWordError(f"Empty term in {text!r}")
        match = _COEFFICIENT.match(part)
        if match:
            terms.append((int(match.group(1)), parse_word(match.group(2), rank)))
            continue
        match = _INTEGER.match(part)
        if match:
            terms.append((int(match.group(1)), identity(rank)))
            continue
        terms.append((1, parse_word(part, rank)))
    return GroupRingElement(terms, level, rank)
