"""
Fox derivatives as group-ring elements.

`fox_derivative` is the right-multiplied convention
∂_i(gh) = ∂_i g + (∂_i h) g^{-1}; the standard left derivative is its
involution and is exposed only as `left_fox_derivative`.
"""
from dataclasses import dataclass
from typing import Tuple
import logging

from apps.free_words.services import Word
from apps.fox_calculus.services.free_differential import raw_fox_terms
from apps.fox_calculus.services.group_ring import GroupRingElement
from apps.fox_calculus.services.quotient import INFINITY, LevelLike, QuotientLevel, as_level
from utils.validators import IndexValidator

logger = logging.getLogger(__name__)


def fox_derivative(i: int, w: Word, level: LevelLike = INFINITY) -> GroupRingElement:
    """
    ∂_i w with every group term projected to F/F^(level) and like terms merged.

    Raises:
        InvalidWordError: If i is not a generator index of w's rank
        ResourceCapExceeded: If level or the term count exceeds its cap
    """
    IndexValidator.validate_index(i, w.rank)
    terms = [(c, Word._trusted(letters, w.rank)) for c, letters in raw_fox_terms(i, w.letters)]
    return GroupRingElement(terms, level, w.rank)


def left_fox_derivative(i: int, w: Word, level: LevelLike = INFINITY) -> GroupRingElement:
    """The standard left derivative D_i(gh) = D_i g + g D_i h."""
    return fox_derivative(i, w, level).involute()


@dataclass(frozen=True)
class FoxVector:
    """The coordinates (∂_1 w, ..., ∂_rank w)."""

    entries: Tuple[GroupRingElement, ...]

    def __post_init__(self):
        levels = {entry.level for entry in self.entries}
        ranks = {entry.rank for entry in self.entries}
        if len(levels) > 1 or len(ranks) > 1:
            raise ValueError("FoxVector entries must share level and rank")

    @property
    def rank(self) -> int:
        return self.entries[0].rank

    @property
    def level(self) -> QuotientLevel:
        return self.entries[0].level

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for entry in self.entries)

    def coordinate(self, i: int) -> GroupRingElement:
        """1-based coordinate ∂_i."""
        IndexValidator.validate_index(i, len(self.entries))
        return self.entries[i - 1]

    def __len__(self):
        return len(self.entries)


def fox_vector(w: Word, level: LevelLike = INFINITY) -> FoxVector:
    level = as_level(level)
    return FoxVector(tuple(fox_derivative(i, w, level) for i in range(1, w.rank + 1)))
