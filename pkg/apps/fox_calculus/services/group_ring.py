"""
Integral group rings Z[F/F^(k)] of derived-series quotients.

Terms are merged by class key at the element's level. Each merged term
keeps the shortlex-least word that contributed to it, so the textual form
of a computation is reproducible run to run.
"""
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Tuple
import logging

from apps.free_words.services import Word, identity, invert, multiply
from apps.fox_calculus.services.quotient import (
    INFINITY,
    LevelLike,
    QuotientElement,
    QuotientLevel,
    as_level,
    class_key,
)
from utils.exceptions import LevelMismatchError
from utils.validators import IndexValidator, LevelValidator

logger = logging.getLogger(__name__)

Term = Tuple[int, Word]


class GroupRingElement:
    """
    A finite integer combination of elements of F/F^(level).

    No two stored terms are semantically equal and no coefficient is zero,
    so `is_zero` is just emptiness.
    """

    __slots__ = ('level', 'rank', '_terms')

    def __init__(self, terms: Iterable[Term] = (), level: LevelLike = INFINITY, rank: Optional[int] = None):
        self.level = as_level(level)
        merged: Dict[Hashable, List] = {}
        for coefficient, word in terms:
            if rank is None:
                rank = word.rank
            IndexValidator.validate_same_rank(rank, word.rank)
            if not coefficient:
                continue
            key = class_key(word, self.level)
            slot = merged.get(key)
            if slot is None:
                merged[key] = [coefficient, word]
            else:
                slot[0] += coefficient
                if word.sort_key < slot[1].sort_key:
                    slot[1] = word
        if rank is None:
            raise ValueError("Cannot infer the rank of an empty group-ring element")
        LevelValidator.validate_terms(len(merged))
        self.rank = rank
        self._terms: Dict[Hashable, Term] = {
            key: (c, w) for key, (c, w) in merged.items() if c
        }

    @classmethod
    def zero(cls, rank: int, level: LevelLike = INFINITY) -> 'GroupRingElement':
        return cls((), level, rank)

    @classmethod
    def one(cls, rank: int, level: LevelLike = INFINITY) -> 'GroupRingElement':
        return cls([(1, identity(rank))], level, rank)

    @classmethod
    def from_word(cls, w: Word, level: LevelLike = INFINITY, coefficient: int = 1) -> 'GroupRingElement':
        return cls([(coefficient, w)], level, w.rank)

    @property
    def terms(self) -> List[Term]:
        """(coefficient, representative) pairs in canonical word order."""
        return sorted(self._terms.values(), key=lambda term: term[1].sort_key)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficients(self) -> Dict[Hashable, int]:
        return {key: c for key, (c, _) in self._terms.items()}

    def elements(self) -> List[QuotientElement]:
        return [QuotientElement(w, self.level) for _, w in self.terms]

    def _check_compatible(self, other: 'GroupRingElement'):
        if self.level != other.level:
            raise LevelMismatchError(
                f"Cannot combine elements at levels {self.level} and {other.level}"
            )
        IndexValidator.validate_same_rank(self.rank, other.rank)

    def __add__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        self._check_compatible(other)
        return GroupRingElement(
            list(self._terms.values()) + list(other._terms.values()), self.level, self.rank
        )

    def __neg__(self) -> 'GroupRingElement':
        return self.scale(-1)

    def __sub__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        return self + (-other)

    def scale(self, factor: int) -> 'GroupRingElement':
        return GroupRingElement(
            [(factor * c, w) for c, w in self._terms.values()], self.level, self.rank
        )

    def __mul__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        if isinstance(other, int):
            return self.scale(other)
        self._check_compatible(other)
        LevelValidator.validate_terms(len(self._terms) * len(other._terms))
        products = [
            (c1 * c2, multiply(w1, w2))
            for c1, w1 in self._terms.values()
            for c2, w2 in other._terms.values()
        ]
        return GroupRingElement(products, self.level, self.rank)

    __rmul__ = scale

    def involute(self) -> 'GroupRingElement':
        """Σ c·g ↦ Σ c·g^{-1}."""
        return GroupRingElement(
            [(c, invert(w)) for c, w in self._terms.values()], self.level, self.rank
        )

    def augmentation(self) -> int:
        return sum(c for c, _ in self._terms.values())

    def project(self, level: LevelLike) -> 'GroupRingElement':
        """
        Coarsen to a lower quotient level.

        Raises:
            LevelMismatchError: If level is finer than the current one
        """
        target = as_level(level)
        if not _coarser_or_equal(target, self.level):
            raise LevelMismatchError(f"Cannot project from level {self.level} to finer level {target}")
        return GroupRingElement(list(self._terms.values()), target, self.rank)

    def map_words(self, homomorphism: Callable[[Word], Word], level: LevelLike,
                  rank: int) -> 'GroupRingElement':
        """Push every group element through a homomorphism into a free group of the given rank."""
        return GroupRingElement(
            [(c, homomorphism(w)) for c, w in self._terms.values()], level, rank
        )

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (
            self.level == other.level
            and self.rank == other.rank
            and self.coefficients() == other.coefficients()
        )

    def __hash__(self):
        return hash((self.level, self.rank, frozenset(self.coefficients().items())))

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        from apps.fox_calculus.serializers.ring_serializer import format_ring
        return format_ring(self)

    def __repr__(self):
        return f"GroupRingElement({str(self)!r}, level={self.level}, rank={self.rank})"


def _coarser_or_equal(target: QuotientLevel, current: QuotientLevel) -> bool:
    if target.is_infinite:
        return current.is_infinite
    return current.is_infinite or target.k <= current.k


def ring_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a + b


def ring_sub(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a - b


def ring_neg(a: GroupRingElement) -> GroupRingElement:
    return -a


def ring_scale(a: GroupRingElement, factor: int) -> GroupRingElement:
    return a.scale(factor)


def ring_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """
    Product in Z[F/F^(level)].

    Raises:
        LevelMismatchError: If the factors live at different levels
        ResourceCapExceeded: If the expanded product exceeds CONCORDIA_MAX_TERMS
    """
    return a * b


def ring_involute(a: GroupRingElement) -> GroupRingElement:
    return a.involute()


def ring_is_zero(a: GroupRingElement) -> bool:
    return a.is_zero


def project(a: GroupRingElement, level: LevelLike) -> GroupRingElement:
    return a.project(level)


def augmentation(a: GroupRingElement) -> int:
    return a.augmentation()
