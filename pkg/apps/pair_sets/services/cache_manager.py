from django.conf import settings
from django.core.cache import cache
from typing import Optional
import logging

logger = logging.getLogger(__name__)


class PairSetCache:
    """
    Caches generated pair sets.

    Cache key: pair_sets:<rank>:<level>
    TTL: CONCORDIA_CACHE_TTL_SECONDS
    """

    CACHE_PREFIX = 'pair_sets'

    @classmethod
    def get_cache_key(cls, level: int, rank: int) -> str:
        return f"{cls.CACHE_PREFIX}:{rank}:{level}"

    @classmethod
    def get(cls, level: int, rank: int) -> Optional['PairSet']:
        """
        Retrieve a cached pair set.

        Returns:
            The PairSet or None if not cached or cache unavailable
        """
        try:
            cache_key = cls.get_cache_key(level, rank)
            pair_set = cache.get(cache_key)
            if pair_set is not None:
                logger.debug(f"Cache HIT for pair set: {cache_key}")
            else:
                logger.debug(f"Cache MISS for pair set: {cache_key}")
            return pair_set
        except Exception as e:
            # Cache unavailable - regenerate
            logger.warning(f"Cache GET failed, continuing without cache: {e}")
            return None

    @classmethod
    def set(cls, pair_set: 'PairSet') -> None:
        """Cache a pair set; fails silently if the cache is unavailable."""
        try:
            cache_key = cls.get_cache_key(pair_set.level, pair_set.rank)
            cache.set(cache_key, pair_set, settings.CONCORDIA_CACHE_TTL_SECONDS)
            logger.debug(
                f"Cached pair set: {cache_key}",
                extra={'count': len(pair_set), 'ttl': settings.CONCORDIA_CACHE_TTL_SECONDS}
            )
        except Exception as e:
            logger.warning(f"Cache SET failed, pair set not cached: {e}")

    @classmethod
    def invalidate(cls, level: int, rank: int) -> None:
        try:
            cache.delete(cls.get_cache_key(level, rank))
        except Exception as e:
            logger.warning(f"Cache DELETE failed: {e}")
