"""
Freely reduced words in a free group of configurable rank.

A letter is a signed generator index: x_i is stored as i, x_i^{-1} as -i.
Words are immutable and always freely reduced; the empty word is the
identity.

Conventions:
    [g, h] = g h g^{-1} h^{-1}
    y^x    = x^{-1} y x
"""
from dataclasses import dataclass
from random import Random
from typing import Iterable, List, Sequence, Tuple, Union
from utils.exceptions import InvalidWordError
from utils.validators import IndexValidator

DEFAULT_RANK = 4

RawLetter = Union[int, Tuple[int, int]]


@dataclass(frozen=True)
class Generator:
    """The generator x_index of a free group."""

    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise InvalidWordError(f"Generator index must be a positive integer, got {self.index}")

    def word(self, rank: int = DEFAULT_RANK) -> 'Word':
        IndexValidator.validate_index(self.index, rank)
        return Word._trusted((self.index,), rank)


class Word:
    """
    A freely reduced word.

    Build words with `reduce`, `generator` or `identity`; the constructor
    validates and reduces its input.
    """

    __slots__ = ('letters', 'rank', '_hash')

    def __init__(self, letters: Iterable[RawLetter] = (), rank: int = DEFAULT_RANK):
        IndexValidator.validate_rank(rank)
        signed = []
        for letter in letters:
            if isinstance(letter, tuple):
                index, sign = letter
                if sign not in (1, -1):
                    raise InvalidWordError(f"Letter sign must be +1 or -1, got {sign}")
                letter = index * sign
            IndexValidator.validate_index(abs(letter), rank)
            signed.append(letter)
        self.letters = _free_reduce(signed)
        self.rank = rank
        self._hash = hash((self.letters, rank))

    @classmethod
    def _trusted(cls, letters: Tuple[int, ...], rank: int) -> 'Word':
        """Build from letters already known to be reduced and in range."""
        word = cls.__new__(cls)
        word.letters = letters
        word.rank = rank
        word._hash = hash((letters, rank))
        return word

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.letters)

    def __lt__(self, other: 'Word') -> bool:
        return self.sort_key < other.sort_key

    def __mul__(self, other: 'Word') -> 'Word':
        return multiply(self, other)

    def __invert__(self) -> 'Word':
        return invert(self)

    def __repr__(self):
        from apps.free_words.serializers.word_serializer import format_word
        return f"Word({format_word(self)!r}, rank={self.rank})"

    @property
    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        """Shortlex order with x1 < x1^-1 < x2 < x2^-1 < ..."""
        return (len(self.letters), tuple((abs(l), l < 0) for l in self.letters))

    @property
    def is_identity(self) -> bool:
        return not self.letters


def _free_reduce(letters: Sequence[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def identity(rank: int = DEFAULT_RANK) -> Word:
    IndexValidator.validate_rank(rank)
    return Word._trusted((), rank)


def generator(index: int, rank: int = DEFAULT_RANK) -> Word:
    return Generator(index).word(rank)


def reduce(letters: Iterable[RawLetter], rank: int = DEFAULT_RANK) -> Word:
    """
    Return the unique freely reduced word of a raw letter sequence.

    Raises:
        InvalidWordError: If an index is out of range
    """
    return Word(letters, rank)


def multiply(a: Word, b: Word) -> Word:
    """Reduced concatenation a·b."""
    IndexValidator.validate_same_rank(a.rank, b.rank)
    left, right = a.letters, b.letters
    cut = 0
    limit = min(len(left), len(right))
    while cut < limit and left[-1 - cut] == -right[cut]:
        cut += 1
    return Word._trusted(left[:len(left) - cut] + right[cut:], a.rank)


def invert(a: Word) -> Word:
    return Word._trusted(tuple(-l for l in reversed(a.letters)), a.rank)


def power(a: Word, exponent: int) -> Word:
    base = a if exponent >= 0 else invert(a)
    result = identity(a.rank)
    for _ in range(abs(exponent)):
        result = multiply(result, base)
    return result


def commutator(g: Word, h: Word) -> Word:
    """[g, h] = g h g^{-1} h^{-1}."""
    return multiply(multiply(g, h), multiply(invert(g), invert(h)))


def conjugate(y: Word, x: Word) -> Word:
    """y^x = x^{-1} y x."""
    return multiply(multiply(invert(x), y), x)


def exponent_sum(w: Word, i: int) -> int:
    """Net exponent of x_i in w."""
    IndexValidator.validate_index(i, w.rank)
    return sum(1 if l > 0 else -1 for l in w.letters if abs(l) == i)


def abelianize(w: Word) -> Tuple[int, ...]:
    """Exponent-sum vector (exponent_sum(w, 1), ..., exponent_sum(w, rank))."""
    vector = [0] * w.rank
    for l in w.letters:
        vector[abs(l) - 1] += 1 if l > 0 else -1
    return tuple(vector)


def substitute(w: Word, images: Sequence[Word]) -> Word:
    """
    Apply the homomorphism x_i -> images[i-1].

    All images must share one rank, which becomes the rank of the result.
    """
    if len(images) != w.rank:
        raise InvalidWordError(f"Need {w.rank} images, got {len(images)}")
    target_rank = images[0].rank
    IndexValidator.validate_same_rank(*(image.rank for image in images))
    inverses = [invert(image) for image in images]
    result: List[int] = []
    for l in w.letters:
        piece = images[l - 1] if l > 0 else inverses[-l - 1]
        for letter in piece.letters:
            if result and result[-1] == -letter:
                result.pop()
            else:
                result.append(letter)
    return Word._trusted(tuple(result), target_rank)


def random_word(rank: int, max_length: int, rng: Random) -> Word:
    """A random reduced word of length at most max_length."""
    length = rng.randint(0, max_length)
    letters: List[int] = []
    while len(letters) < length:
        letter = rng.randint(1, rank) * rng.choice((1, -1))
        if letters and letters[-1] == -letter:
            continue
        letters.append(letter)
    return Word._trusted(tuple(letters), rank)
