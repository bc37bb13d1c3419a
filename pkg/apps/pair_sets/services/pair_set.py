"""
The recursive pair sets P_n and their infection axes.

    P_0     = {(x1, x2)}
    P_1     = {([x_i,x_j], [x_i,x_k]) : i, j, k distinct}
    P_{k+1} = for (y, z) in P_k and 1 <= i <= rank:
                ([y, y^{x_i}], [z, z^{x_i}]),
                ([y, z],       [z, z^{x_i}]),
                ([y, y^{x_i}], [y, z])

Pairs are deduplicated by reduced-word equality and ordered by length,
then lexicographically, on their serialized `y<TAB>z` form.
"""
from dataclasses import dataclass, field
from typing import Iterator, List, Tuple
import logging

from apps.free_words.serializers import format_word
from apps.free_words.services import DEFAULT_RANK, Word, commutator, conjugate, generator
from apps.fox_calculus.services import derived_member
from apps.pair_sets.services.cache_manager import PairSetCache
from utils.validators import IndexValidator, LevelValidator

logger = logging.getLogger(__name__)

CASE_BOTH_NONTRIVIAL = 1
CASE_Y_TRIVIAL = 2
CASE_Z_TRIVIAL = 3


@dataclass(frozen=True)
class WordPair:
    y: Word
    z: Word

    def __post_init__(self):
        IndexValidator.validate_same_rank(self.y.rank, self.z.rank)

    @property
    def rank(self) -> int:
        return self.y.rank

    @property
    def serialized(self) -> str:
        return f"{format_word(self.y)}\t{format_word(self.z)}"

    @property
    def canonical_key(self) -> Tuple[int, str]:
        text = self.serialized
        return (len(text), text)

    def components(self) -> Tuple[Word, Word]:
        return (self.y, self.z)


@dataclass(frozen=True)
class PairSet:
    level: int
    pairs: Tuple[WordPair, ...]
    rank: int = DEFAULT_RANK

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[WordPair]:
        return iter(self.pairs)

    def serialize(self) -> List[str]:
        return [pair.serialized for pair in self.pairs]


@dataclass
class PairSetAudit:
    """Outcome of checking every component against F^(level)."""

    level: int
    checked: int = 0
    failures: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def canonicalize(pairs, level: int, rank: int) -> PairSet:
    """Deduplicate by reduced words and sort canonically."""
    unique = {}
    for pair in pairs:
        unique.setdefault((pair.y.letters, pair.z.letters), pair)
    ordered = sorted(unique.values(), key=lambda pair: pair.canonical_key)
    return PairSet(level=level, pairs=tuple(ordered), rank=rank)


def base_pair_set(rank: int = DEFAULT_RANK) -> PairSet:
    """P_0 = {(x1, x2)}."""
    return PairSet(level=0, pairs=(WordPair(generator(1, rank), generator(2, rank)),), rank=rank)


def first_pair_set(rank: int = DEFAULT_RANK) -> PairSet:
    """P_1, listed explicitly rather than grown from P_0."""
    x = [generator(i, rank) for i in range(1, rank + 1)]
    pairs = [
        WordPair(commutator(x[i], x[j]), commutator(x[i], x[k]))
        for i in range(rank)
        for j in range(rank)
        for k in range(rank)
        if len({i, j, k}) == 3
    ]
    return canonicalize(pairs, 1, rank)


def successor_for_case(pair: WordPair, case: int, x: Word) -> WordPair:
    """
    The successor of (y, z) dictated by a case of the special-pair induction.

    case 1: ([y, y^x], [z, z^x])
    case 2: ([y, z],   [z, z^x])
    case 3: ([y, y^x], [y, z])
    """
    y, z = pair.y, pair.z
    if case == CASE_BOTH_NONTRIVIAL:
        return WordPair(commutator(y, conjugate(y, x)), commutator(z, conjugate(z, x)))
    if case == CASE_Y_TRIVIAL:
        return WordPair(commutator(y, z), commutator(z, conjugate(z, x)))
    if case == CASE_Z_TRIVIAL:
        return WordPair(commutator(y, conjugate(y, x)), commutator(y, z))
    raise ValueError(f"Successor case must be 1, 2 or 3, got {case}")


def successors(pair: WordPair) -> List[WordPair]:
    """The 3·rank successor pairs of one pair, grouped by generator."""
    result = []
    for i in range(1, pair.rank + 1):
        x = generator(i, pair.rank)
        for case in (CASE_BOTH_NONTRIVIAL, CASE_Y_TRIVIAL, CASE_Z_TRIVIAL):
            result.append(successor_for_case(pair, case, x))
    return result


def next_pair_set(pair_set: PairSet) -> PairSet:
    """
    P_{k+1} from P_k.

    Raises:
        ResourceCapExceeded: If the expansion would exceed CONCORDIA_MAX_TERMS pairs
    """
    LevelValidator.validate_terms(3 * pair_set.rank * len(pair_set))
    expanded = [child for pair in pair_set for child in successors(pair)]
    return canonicalize(expanded, pair_set.level + 1, pair_set.rank)


def build_pair_set(n: int, rank: int = DEFAULT_RANK) -> PairSet:
    """Generate P_n without consulting the cache."""
    if n < 0:
        raise ValueError(f"Pair set level must be non-negative, got {n}")
    if n == 0:
        return base_pair_set(rank)
    current = first_pair_set(rank)
    while current.level < n:
        current = next_pair_set(current)
        logger.debug(
            f"Generated P_{current.level}",
            extra={'level': current.level, 'count': len(current), 'rank': rank}
        )
    return current


def generate_pair_set(n: int, rank: int = DEFAULT_RANK) -> PairSet:
    """
    P_n, deduplicated and canonically ordered; cached per (rank, n).

    Raises:
        ValueError: If n is negative
        ResourceCapExceeded: If P_n would exceed CONCORDIA_MAX_TERMS pairs
    """
    cached = PairSetCache.get(n, rank)
    if cached is not None:
        return cached
    pair_set = build_pair_set(n, rank)
    PairSetCache.set(pair_set)
    return pair_set


def axes(n: int, rank: int = DEFAULT_RANK) -> List[Word]:
    """
    The distinct components of P_{n-1}, shortest first.

    Raises:
        ValueError: If n < 1
    """
    if n < 1:
        raise ValueError(f"Axes need n >= 1, got {n}")
    unique = {}
    for pair in generate_pair_set(n - 1, rank):
        for w in pair.components():
            unique.setdefault(w.letters, w)
    return sorted(unique.values(), key=lambda w: (len(format_word(w)), format_word(w)))


def audit_pair_set(pair_set: PairSet) -> PairSetAudit:
    """
    Check every component with derived_member(., level).

    Failures are reported in the record, never raised. Caps still raise.
    """
    audit = PairSetAudit(level=pair_set.level)
    for index, pair in enumerate(pair_set):
        for name, w in (('y', pair.y), ('z', pair.z)):
            audit.checked += 1
            if not derived_member(w, pair_set.level):
                audit.failures.append((index, name))
    if audit.failures:
        logger.warning(
            f"Pair set audit found {len(audit.failures)} failures",
            extra={'level': pair_set.level, 'failures': len(audit.failures)}
        )
    return audit
