"""
The genus-2 surface relation and its fourth Fox coordinate.

After reordering, T is g[x3,x4] or g[x4,x3] with g = [x1,x2] or [x2,x1];
the closed forms are

    ∂_4(g[x3,x4]) = (x3^-1 - [x4,x3]) g^-1
    ∂_4(g[x4,x3]) = (1 - x4 x3^-1 x4^-1) g^-1
"""
from dataclasses import dataclass

from apps.free_words.serializers import format_word
from apps.free_words.services import Word, commutator, generator
from apps.fox_calculus.services import GroupRingElement, fox_derivative
from apps.special_pairs.services.solution_map import (
    SOURCE_RANK,
    Reordering,
    SolutionMap,
    require_condition1,
)


@dataclass(frozen=True)
class SurfaceRelation:
    g_swapped: bool = False
    tail_swapped: bool = False

    @classmethod
    def standard(cls, reordering: Reordering) -> 'SurfaceRelation':
        """[x1,x2][x3,x4] written in the relabelled generators."""
        return cls(reordering.swap12, reordering.swap34)

    def word(self) -> Word:
        x = [generator(i, SOURCE_RANK) for i in range(1, SOURCE_RANK + 1)]
        g = commutator(x[1], x[0]) if self.g_swapped else commutator(x[0], x[1])
        tail = commutator(x[3], x[2]) if self.tail_swapped else commutator(x[2], x[3])
        return g * tail

    @property
    def variant(self) -> str:
        g = '[x2,x1]' if self.g_swapped else '[x1,x2]'
        tail = '[x4,x3]' if self.tail_swapped else '[x3,x4]'
        return g + tail

    def __str__(self):
        return format_word(self.word())


def relation_coordinate(r: SolutionMap, n: int, relation: SurfaceRelation) -> GroupRingElement:
    """rπ_n ∂_4(T) in Z[G/G^(n)]."""
    return fox_derivative(4, relation.word()).map_words(r.apply, n, r.target_rank)


def check_relation_coordinate(r: SolutionMap, n: int, relation: SurfaceRelation) -> bool:
    """
    True iff rπ_n ∂_4(T) is nonzero, with r taken under its condition-1
    reordering and T written in the relabelled generators.

    Raises:
        SolutionMapError: If r fails condition 1
    """
    reordering = require_condition1(r)
    if not reordering.is_identity:
        r = r.reordered(reordering)
    return not relation_coordinate(r, n, relation).is_zero
