from fractions import Fraction
from django.conf import settings
import logging

from utils.exceptions import (
    InvalidFormError,
    InvalidWordError,
    PlanError,
    RankMismatchError,
    ResourceCapExceeded,
)

logger = logging.getLogger(__name__)


class IndexValidator:
    """Validates generator indices and ranks."""

    MAX_RANK = 99

    @staticmethod
    def validate_rank(rank: int) -> bool:
        """
        Validate a free-group rank.

        Raises:
            InvalidWordError: If rank is not in 1..99
        """
        if not isinstance(rank, int) or rank < 1 or rank > IndexValidator.MAX_RANK:
            raise InvalidWordError(
                f"Rank {rank} is outside acceptable range [1, {IndexValidator.MAX_RANK}]"
            )
        return True

    @staticmethod
    def validate_index(index: int, rank: int) -> bool:
        """
        Validate a generator index against a rank.

        Raises:
            InvalidWordError: If index is not in 1..rank
        """
        if not isinstance(index, int) or index < 1 or index > rank:
            raise InvalidWordError(f"Generator index {index} is outside [1, {rank}]")
        return True

    @staticmethod
    def validate_same_rank(*ranks: int) -> bool:
        """Raises RankMismatchError unless all ranks agree."""
        if len(set(ranks)) > 1:
            raise RankMismatchError(f"Rank mismatch: {sorted(set(ranks))}")
        return True


class LevelValidator:
    """Validates derived-series levels against the configured depth cap."""

    @staticmethod
    def max_depth() -> int:
        return settings.CONCORDIA_MAX_DEPTH

    @staticmethod
    def max_terms() -> int:
        return settings.CONCORDIA_MAX_TERMS

    @staticmethod
    def validate_depth(k: int) -> bool:
        """
        Validate that a finite quotient level is within the depth cap.

        Raises:
            ValueError: If k is negative
            ResourceCapExceeded: If k exceeds CONCORDIA_MAX_DEPTH
        """
        if k < 0:
            raise ValueError(f"Quotient level must be non-negative, got {k}")
        limit = LevelValidator.max_depth()
        if k > limit:
            raise ResourceCapExceeded('depth', limit, k)
        return True

    @staticmethod
    def validate_terms(count: int) -> bool:
        """Raises ResourceCapExceeded when count exceeds CONCORDIA_MAX_TERMS."""
        limit = LevelValidator.max_terms()
        if count > limit:
            logger.warning(f"Term cap hit: {count} > {limit}")
            raise ResourceCapExceeded('terms', limit, count)
        return True


class OmegaValidator:
    """Validates evaluation points on the unit circle."""

    TOLERANCE = 1e-12

    @staticmethod
    def validate_unit(omega: complex) -> bool:
        """
        Validate |omega| = 1.

        Raises:
            InvalidFormError: If omega is off the unit circle
        """
        if abs(abs(omega) - 1.0) > OmegaValidator.TOLERANCE:
            raise InvalidFormError(f"|omega| = {abs(omega)} is not 1")
        return True


class RationalValidator:
    """Validates user-supplied rational bounds."""

    @staticmethod
    def parse_positive(value) -> Fraction:
        """
        Parse a positive rational from int, Fraction or text such as '100' or '7/2'.

        Raises:
            PlanError: If the value is not a positive rational
        """
        try:
            parsed = Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise PlanError(f"Not a rational number: {value!r}") from exc
        if parsed <= 0:
            raise PlanError(f"Bound must be positive, got {parsed}")
        return parsed
