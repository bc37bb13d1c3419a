"""
Pair-set file codec.

    # level=2 count=288
    <y>\t<z>
    ...
"""
import re

from apps.free_words.serializers import parse_word
from apps.free_words.services import DEFAULT_RANK
from apps.pair_sets.services import PairSet, WordPair
from utils.exceptions import InvalidWordError

_HEADER = re.compile(r'^#\s*level=(\d+)\s+count=(\d+)\s*$')


def format_pair_set(pair_set: PairSet) -> str:
    lines = [f"# level={pair_set.level} count={len(pair_set)}"]
    lines.extend(pair_set.serialize())
    return '\n'.join(lines) + '\n'


def parse_pair_set(text: str, rank: int = DEFAULT_RANK) -> PairSet:
    """
    Parse a pair-set file, keeping the file's pair order.

    Raises:
        InvalidWordError: On a bad header, a bad line or a count mismatch
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidWordError("Empty pair-set file")
    header = _HEADER.match(lines[0])
    if not header:
        raise InvalidWordError(f"Bad pair-set header {lines[0]!r}")
    level, count = int(header.group(1)), int(header.group(2))
    pairs = []
    for number, line in enumerate(lines[1:], start=2):
        parts = line.split('\t')
        if len(parts) != 2:
            raise InvalidWordError(f"Line {number}: expected 'y<TAB>z'")
        pairs.append(WordPair(parse_word(parts[0], rank), parse_word(parts[1], rank)))
    if len(pairs) != count:
        raise InvalidWordError(f"Header says {count} pairs, file has {len(pairs)}")
    return PairSet(level=level, pairs=tuple(pairs), rank=rank)
