"""
Word problem in the derived-series quotients F/F^(k).

Equality in F/F^(k) is decided by canonical class keys:

    level INFINITY  the reduced word itself
    level 0         a single class
    level 1         the exponent-sum vector
    level k >= 2    (class at level k-1, canonical ∂_1 w, ..., ∂_r w in Z[F/F^(k-1)])

The level-k rule is the Magnus embedding criterion: F/[N,N] embeds in
2x2 matrices over Z[F/N] through (gN, Fox derivatives of g), so two words
agree modulo F^(k) = [F^(k-1), F^(k-1)] exactly when their keys agree.
Keys at level k >= 2 are interned to small integers per (rank, level).

Target groups downstream are free, where the ordinary and rational derived
series coincide (F^(k)/F^(k+1) is torsion free).
"""
from dataclasses import dataclass
from functools import lru_cache
from collections import defaultdict
from threading import Lock
from typing import Dict, FrozenSet, Hashable, Optional, Tuple, Union
import logging

from apps.free_words.services import Word, identity, invert, multiply
from apps.fox_calculus.services.free_differential import Letters, raw_fox_terms
from utils.validators import LevelValidator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientLevel:
    """The quotient F/F^(k); k = None stands for the free group itself."""

    k: Optional[int]

    def __post_init__(self):
        if self.k is not None and self.k < 0:
            raise ValueError(f"Quotient level must be non-negative, got {self.k}")

    @property
    def is_infinite(self) -> bool:
        return self.k is None

    def __str__(self):
        return 'inf' if self.k is None else str(self.k)


INFINITY = QuotientLevel(None)

LevelLike = Union[QuotientLevel, int, str, None]


def as_level(value: LevelLike) -> QuotientLevel:
    """Accept a QuotientLevel, an int, None or 'inf'."""
    if isinstance(value, QuotientLevel):
        return value
    if value is None or (isinstance(value, str) and value.lower() in ('inf', 'infinity')):
        return INFINITY
    return QuotientLevel(int(value))


class WordClassRegistry:
    """
    Interning table for level-k class keys (k >= 2).

    Ids are never evicted: they must stay stable for the process lifetime.
    """

    _lock = Lock()
    _ids: Dict[Tuple[int, int], Dict[Hashable, int]] = defaultdict(dict)

    @classmethod
    def intern(cls, rank: int, k: int, key: Hashable) -> int:
        with cls._lock:
            table = cls._ids[(rank, k)]
            return table.setdefault(key, len(table))


def _abelian(letters: Letters, rank: int) -> Tuple[int, ...]:
    vector = [0] * rank
    for l in letters:
        vector[abs(l) - 1] += 1 if l > 0 else -1
    return tuple(vector)


@lru_cache(maxsize=1 << 18)
def _class_key(letters: Letters, rank: int, k: Optional[int]) -> Hashable:
    if k is None:
        return letters
    if k == 0:
        return ()
    if k == 1:
        return _abelian(letters, rank)
    structural = (_class_key(letters, rank, k - 1), canonical_fox_forms(letters, rank, k - 1))
    return WordClassRegistry.intern(rank, k, structural)


def canonical_terms(terms, rank: int, k: Optional[int]) -> FrozenSet[Tuple[Hashable, int]]:
    """Merge (coefficient, letters) terms by class at level k; zero sums vanish."""
    merged: Dict[Hashable, int] = defaultdict(int)
    for coefficient, letters in terms:
        merged[_class_key(letters, rank, k)] += coefficient
    return frozenset((key, c) for key, c in merged.items() if c)


def _abelian_fox_forms(letters: Letters, rank: int) -> Tuple[FrozenSet, ...]:
    # Level-1 classes of the prefix inverses tracked by a running exponent
    # vector, so no term word is materialised.
    LevelValidator.validate_terms(len(letters))
    position = [0] * rank
    merged = [defaultdict(int) for _ in range(rank)]
    for l in letters:
        g = abs(l) - 1
        if l > 0:
            merged[g][tuple(-p for p in position)] += 1
            position[g] += 1
        else:
            position[g] -= 1
            merged[g][tuple(-p for p in position)] -= 1
    return tuple(frozenset((key, c) for key, c in m.items() if c) for m in merged)


def canonical_fox_forms(letters: Letters, rank: int, k: Optional[int]) -> Tuple[FrozenSet, ...]:
    """Canonical (∂_1 w, ..., ∂_rank w) in Z[F/F^(k)]; an empty entry is zero."""
    if k == 1:
        return _abelian_fox_forms(letters, rank)
    return tuple(canonical_terms(raw_fox_terms(i, letters), rank, k) for i in range(1, rank + 1))


def class_key(w: Word, level: LevelLike) -> Hashable:
    """
    Canonical key of w in F/F^(level).

    Raises:
        ResourceCapExceeded: If level exceeds CONCORDIA_MAX_DEPTH
    """
    level = as_level(level)
    if not level.is_infinite:
        LevelValidator.validate_depth(level.k)
    return _class_key(w.letters, w.rank, level.k)


def derived_member(w: Word, k: int) -> bool:
    """
    Decide w ∈ F^(k).

    w ∈ F^(0) always; w ∈ F^(1) iff every exponent sum vanishes; for k >= 1,
    w ∈ F^(k+1) iff w ∈ F^(k) and every ∂_i w is zero in Z[F/F^(k)].

    Raises:
        ResourceCapExceeded: If k exceeds CONCORDIA_MAX_DEPTH
    """
    LevelValidator.validate_depth(k)
    if k == 0:
        return True
    if k == 1:
        return not any(_abelian(w.letters, w.rank))
    if not derived_member(w, k - 1):
        return False
    if any(canonical_fox_forms(w.letters, w.rank, k - 1)):
        return False
    logger.debug(
        f"Word of length {len(w)} lies in F^({k})",
        extra={'rank': w.rank, 'level': k, 'length': len(w)}
    )
    return True


def elements_equal(a: Word, b: Word, level: LevelLike) -> bool:
    """a = b in F/F^(level), i.e. a·b^{-1} ∈ F^(level)."""
    level = as_level(level)
    if level.is_infinite:
        return a == b
    return class_key(a, level) == class_key(b, level)


class QuotientElement:
    """The image of a word in F/F^(level); equality is semantic."""

    __slots__ = ('representative', 'level', '_key')

    def __init__(self, representative: Word, level: LevelLike):
        self.representative = representative
        self.level = as_level(level)
        self._key = class_key(representative, self.level)

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return (
            self.level == other.level
            and self.representative.rank == other.representative.rank
            and self._key == other._key
        )

    def __hash__(self):
        return hash((self.level, self.representative.rank, self._key))

    def __mul__(self, other: 'QuotientElement') -> 'QuotientElement':
        return QuotientElement(multiply(self.representative, other.representative), self.level)

    def inverse(self) -> 'QuotientElement':
        return QuotientElement(invert(self.representative), self.level)

    @property
    def is_identity(self) -> bool:
        return self._key == class_key(identity(self.representative.rank), self.level)

    def __repr__(self):
        return f"QuotientElement({self.representative!r}, level={self.level})"
