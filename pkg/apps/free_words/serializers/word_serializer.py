"""
Text codec for words.

Grammar:
    expr   := factor+
    factor := atom ('^' ('(' expr ')' | INT))*
    atom   := 'x' INT | 'e' | '[' expr ',' expr ']' | '(' expr ')'

`u^(v)` is conjugation v^{-1} u v, `u^-1` / `u^3` are powers, `e` is the
identity. Whitespace between factors is optional.

Canonical output is the fully expanded reduced letter list, for example
`x1 x2 x1^-1 x2^-1`; the identity prints as `e`. The compact display form
prints a commutator of two letters as `[x1,x2]`.
"""
import re
from typing import List, Tuple

from apps.free_words.services.word import (
    DEFAULT_RANK,
    Word,
    commutator,
    conjugate,
    generator,
    identity,
    multiply,
    power,
)
from utils.exceptions import InvalidWordError

IDENTITY_TEXT = 'e'

_TOKEN = re.compile(r'\s*(x\d+|e|\^|-?\d+|[\[\](),])')


def _format_letter(l: int) -> str:
    return f"x{l}" if l > 0 else f"x{-l}^-1"


def format_word(w: Word) -> str:
    if w.is_identity:
        return IDENTITY_TEXT
    return ' '.join(_format_letter(l) for l in w.letters)


def format_word_compact(w: Word) -> str:
    """Like format_word, but a b a^-1 b^-1 on two distinct generators prints as [a,b]."""
    letters = w.letters
    if (
        len(letters) == 4
        and abs(letters[0]) != abs(letters[1])
        and letters[2] == -letters[0]
        and letters[3] == -letters[1]
    ):
        return f"[{_format_letter(letters[0])},{_format_letter(letters[1])}]"
    return format_word(w)


def _tokenize(text: str) -> List[str]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if not match:
            raise InvalidWordError(f"Unexpected character at {position} in {text!r}")
        tokens.append(match.group(1))
        position = match.end()
    return tokens


class _Parser:

    def __init__(self, text: str, rank: int):
        self.text = text
        self.rank = rank
        self.tokens = _tokenize(text)
        self.position = 0

    def peek(self):
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self, expected: str = None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise InvalidWordError(
                f"Expected {expected or 'a token'} at token {self.position} in {self.text!r}"
            )
        self.position += 1
        return token

    def parse(self) -> Word:
        word = self.expr()
        if self.peek() is not None:
            raise InvalidWordError(f"Trailing input {self.peek()!r} in {self.text!r}")
        return word

    def expr(self) -> Word:
        word = self.factor()
        while self.peek() is not None and self.peek() not in (')', ']', ','):
            word = multiply(word, self.factor())
        return word

    def factor(self) -> Word:
        word = self.atom()
        while self.peek() == '^':
            self.take('^')
            if self.peek() == '(':
                self.take('(')
                by = self.expr()
                self.take(')')
                word = conjugate(word, by)
            else:
                token = self.take()
                if not re.fullmatch(r'-?\d+', token):
                    raise InvalidWordError(f"Bad exponent {token!r} in {self.text!r}")
                word = power(word, int(token))
        return word

    def atom(self) -> Word:
        token = self.take()
        if token == IDENTITY_TEXT:
            return identity(self.rank)
        if token.startswith('x'):
            return generator(int(token[1:]), self.rank)
        if token == '[':
            left = self.expr()
            self.take(',')
            right = self.expr()
            self.take(']')
            return commutator(left, right)
        if token == '(':
            inner = self.expr()
            self.take(')')
            return inner
        raise InvalidWordError(f"Unexpected token {token!r} in {self.text!r}")


def parse_word(text: str, rank: int = DEFAULT_RANK) -> Word:
    """
    Parse word grammar text into a reduced word.

    Raises:
        InvalidWordError: On syntax errors or generator indices above rank
    """
    if not text or not text.strip():
        raise InvalidWordError("Empty word text; use 'e' for the identity")
    return _Parser(text, rank).parse()


def parse_word_list(text: str, rank: int = DEFAULT_RANK, separator: str = ',') -> List[Word]:
    """
    Parse a separator-delimited list of words, ignoring separators nested
    inside brackets, e.g. `x1, [x1,x2], e`.
    """
    parts, depth, current = [], 0, []
    for char in text:
        if char in '[(':
            depth += 1
        elif char in '])':
            depth -= 1
        if char == separator and depth == 0:
            parts.append(''.join(current))
            current = []
        else:
            current.append(char)
    parts.append(''.join(current))
    return [parse_word(part, rank) for part in parts]


def format_pair(pair: Tuple[Word, Word], separator: str = ' | ') -> str:
    return f"{format_word(pair[0])}{separator}{format_word(pair[1])}"
