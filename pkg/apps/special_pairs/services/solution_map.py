"""
Solution maps r: F(x1..x4) -> G with G free of a chosen rank.

Condition 1: the 4 x target_rank exponent matrix of the images has rank
exactly 2, and after possibly swapping x1<->x2 and x3<->x4 the images of
x1 and x3 are nontrivial in the abelianization.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
import logging

import numpy as np

from apps.free_words.services import Word, abelianize, substitute
from utils.exceptions import SolutionMapError

logger = logging.getLogger(__name__)

SOURCE_RANK = 4


@dataclass(frozen=True)
class Reordering:
    """Relabelling of the surface generators within {x1,x2} and {x3,x4}."""

    swap12: bool = False
    swap34: bool = False

    @property
    def is_identity(self) -> bool:
        return not (self.swap12 or self.swap34)

    def permutation(self) -> Tuple[int, int, int, int]:
        """0-based source index feeding each relabelled generator."""
        first = (1, 0) if self.swap12 else (0, 1)
        second = (3, 2) if self.swap34 else (2, 3)
        return first + second

    @property
    def label(self) -> str:
        parts = [name for name, on in (('swap12', self.swap12), ('swap34', self.swap34)) if on]
        return ','.join(parts) or 'identity'

    @classmethod
    def from_label(cls, label: str) -> 'Reordering':
        label = label.strip()
        if label == 'identity':
            return cls()
        parts = set(label.split(','))
        if not parts <= {'swap12', 'swap34'}:
            raise SolutionMapError(f"Unknown reordering {label!r}")
        return cls('swap12' in parts, 'swap34' in parts)


IDENTITY_REORDERING = Reordering()

# Preference order when several relabellings work.
REORDERINGS = (
    IDENTITY_REORDERING,
    Reordering(swap12=True),
    Reordering(swap34=True),
    Reordering(swap12=True, swap34=True),
)


@dataclass(frozen=True)
class SolutionMap:
    """
    Images of x1..x4 in the free group of rank target_rank.

    `reordering` records a relabelling already applied to the images.
    """

    images: Tuple[Word, ...]
    target_rank: int
    reordering: Reordering = IDENTITY_REORDERING

    def __post_init__(self):
        if len(self.images) != SOURCE_RANK:
            raise SolutionMapError(f"Need {SOURCE_RANK} images, got {len(self.images)}")
        for image in self.images:
            if image.rank != self.target_rank:
                raise SolutionMapError(
                    f"Image rank {image.rank} does not match target rank {self.target_rank}"
                )

    @classmethod
    def from_images(cls, images: Sequence[Word], target_rank: int) -> 'SolutionMap':
        return cls(tuple(images), target_rank)

    @property
    def source_rank(self) -> int:
        return SOURCE_RANK

    def apply(self, w: Word) -> Word:
        """r(w)."""
        return substitute(w, self.images)

    def exponent_matrix(self) -> np.ndarray:
        return np.array([abelianize(image) for image in self.images], dtype=np.int64)

    def reordered(self, reordering: Reordering) -> 'SolutionMap':
        images = tuple(self.images[i] for i in reordering.permutation())
        return SolutionMap(images, self.target_rank, reordering)


def check_condition1(r: SolutionMap) -> Tuple[bool, Optional[Reordering]]:
    """
    (True, reordering) when the image has rank exactly 2 and some reordering
    makes the x1 and x3 rows nonzero; identity is preferred. (False, None)
    otherwise; failure is a verdict, not an error.
    """
    matrix = r.exponent_matrix()
    rank = int(np.linalg.matrix_rank(matrix)) if matrix.size else 0
    if rank != 2:
        logger.debug(f"Condition 1 fails: image rank {rank}", extra={'image_rank': rank})
        return False, None
    for reordering in REORDERINGS:
        rows = matrix[list(reordering.permutation())]
        if rows[0].any() and rows[2].any():
            return True, reordering
    logger.debug("Condition 1 fails: no reordering makes x1 and x3 nontrivial")
    return False, None


def require_condition1(r: SolutionMap) -> Reordering:
    """
    Raises:
        SolutionMapError: If condition 1 fails
    """
    ok, reordering = check_condition1(r)
    if not ok:
        raise SolutionMapError(
            "Solution map fails condition 1: the abelianized image must have rank 2 "
            "with x1 and x3 nontrivial after reordering"
        )
    return reordering


def relabelled(r: SolutionMap) -> SolutionMap:
    """r under its condition-1 reordering; r itself if no reordering helps."""
    ok, reordering = check_condition1(r)
    if not ok or reordering.is_identity:
        return r
    return r.reordered(reordering)
