"""
Records of a special-pair certificate.

A certificate replays the level-by-level induction for one solution map:
the base pair with its two nonvanishing derivatives, one record per level
k = 1..n-1 with the case taken, the final level-n pair, and the surface
relation coordinate. Group-ring fields live in the target group ring at the
level stated by the record.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from apps.fox_calculus.services import GroupRingElement
from apps.pair_sets.services import WordPair
from apps.special_pairs.services.relation import SurfaceRelation
from apps.special_pairs.services.solution_map import Reordering, SolutionMap


@dataclass(frozen=True)
class BaseRecord:
    pair: WordPair
    d4_zero: bool
    evidence: Tuple[GroupRingElement, ...]


@dataclass(frozen=True)
class LevelRecord:
    """One induction step from level k to level k+1."""

    k: int
    pair: WordPair
    y_trivial: bool
    z_trivial: bool
    case: int
    successor: WordPair
    evidence: Tuple[GroupRingElement, ...]
    vanishing: Tuple[GroupRingElement, ...] = ()


@dataclass(frozen=True)
class FinalRecord:
    k: int
    pair: WordPair
    d4_zero: bool


@dataclass(frozen=True)
class RelationRecord:
    relation: SurfaceRelation
    coordinate: GroupRingElement
    nonzero: bool


@dataclass(frozen=True)
class SpecialPairCertificate:
    n: int
    solution_map: SolutionMap
    reordering: Reordering
    base: BaseRecord
    levels: Tuple[LevelRecord, ...]
    final: FinalRecord
    relation: RelationRecord

    @property
    def working_map(self) -> SolutionMap:
        """The solution map with the reordering applied."""
        return self.solution_map.reordered(self.reordering)

    @property
    def final_pair(self) -> WordPair:
        return self.final.pair

    def pair_at(self, k: int) -> Optional[WordPair]:
        """The pair selected at level k, or None outside 1..n."""
        if k == self.n:
            return self.final.pair
        if 1 <= k < self.n:
            return self.levels[k - 1].pair
        return None
