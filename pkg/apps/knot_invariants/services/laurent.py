"""
Integer Laurent polynomials in one variable t.
"""
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

import sympy as sp

from utils.exceptions import InvalidFormError

T = sp.Symbol('t')

Number = Union[int, Fraction, complex]


class LaurentPoly:
    """
    Sparse map exponent -> nonzero integer coefficient.

    Immutable; equality is coefficientwise.
    """

    __slots__ = ('_coefficients',)

    def __init__(self, coefficients: Optional[Mapping[int, int]] = None):
        self._coefficients: Dict[int, int] = {
            int(e): int(c) for e, c in (coefficients or {}).items() if c
        }

    @classmethod
    def constant(cls, c: int) -> 'LaurentPoly':
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> 'LaurentPoly':
        return cls({exponent: c})

    @classmethod
    def t(cls) -> 'LaurentPoly':
        return cls({1: 1})

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self._coefficients)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._coefficients.items()))

    @property
    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def min_degree(self) -> int:
        return min(self._coefficients) if self._coefficients else 0

    @property
    def max_degree(self) -> int:
        return max(self._coefficients) if self._coefficients else 0

    def __getitem__(self, exponent: int) -> int:
        return self._coefficients.get(exponent, 0)

    @staticmethod
    def _coerce(other) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._coefficients)
        for e, c in other._coefficients.items():
            result[e] = result.get(e, 0) + c
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({e: -c for e, c in self._coefficients.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result: Dict[int, int] = {}
        for e1, c1 in self._coefficients.items():
            for e2, c2 in other._coefficients.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'LaurentPoly':
        if exponent < 0:
            raise ValueError("Negative powers of Laurent polynomials are not Laurent polynomials")
        result = LaurentPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def conjugate(self) -> 'LaurentPoly':
        """t -> t^-1."""
        return LaurentPoly({-e: c for e, c in self._coefficients.items()})

    def shift(self, k: int) -> 'LaurentPoly':
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coefficients.items()})

    def evaluate(self, value: Number) -> Number:
        """Exact for int and Fraction arguments, complex otherwise."""
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            return sum((c * value ** e for e, c in self._coefficients.items()), Fraction(0))
        return sum(c * complex(value) ** e for e, c in self._coefficients.items())

    @property
    def is_symmetric(self) -> bool:
        """p(t^-1) = p(t)."""
        return self == self.conjugate()

    @property
    def is_palindromic(self) -> bool:
        """Symmetric after some shift by a power of t."""
        if self.is_zero:
            return True
        span = self.min_degree + self.max_degree
        return all(self[span - e] == c for e, c in self._coefficients.items())

    def normalized(self) -> 'LaurentPoly':
        """Lowest exponent 0, positive leading coefficient."""
        if self.is_zero:
            return self
        result = self.shift(-self.min_degree)
        return -result if result[result.max_degree] < 0 else result

    def to_sympy(self, symbol: sp.Symbol = T) -> sp.Expr:
        return sp.Add(*[sp.Integer(c) * symbol ** e for e, c in self._coefficients.items()])

    @classmethod
    def from_sympy(cls, expr, symbol: sp.Symbol = T) -> 'LaurentPoly':
        """
        Raises:
            InvalidFormError: On non-integer coefficients or foreign symbols
        """
        expr = sp.expand(sp.sympify(expr))
        if expr.free_symbols - {symbol}:
            raise InvalidFormError(f"Unexpected symbols {expr.free_symbols - {symbol}} in {expr}")
        result: Dict[int, int] = {}
        for monomial, coefficient in expr.as_coefficients_dict().items():
            if monomial == 1:
                exponent = 0
            else:
                base, exponent = monomial.as_base_exp()
                if base != symbol or not exponent.is_Integer:
                    raise InvalidFormError(f"{monomial} is not a power of {symbol}")
            if not coefficient.is_Integer:
                raise InvalidFormError(f"Coefficient {coefficient} is not an integer")
            result[int(exponent)] = result.get(int(exponent), 0) + int(coefficient)
        return cls(result)

    @classmethod
    def parse(cls, text: str) -> 'LaurentPoly':
        """
        Parse text such as `t^-1 + 2 - t` or `t^2 - 3*t + 1`.

        Raises:
            InvalidFormError: On syntax errors or non-integer coefficients
        """
        try:
            expr = sp.sympify(text.replace('^', '**'), locals={'t': T})
            return cls.from_sympy(expr)
        except (sp.SympifyError, SyntaxError, TypeError, AttributeError) as exc:
            raise InvalidFormError(f"Cannot parse Laurent polynomial {text!r}") from exc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(frozenset(self._coefficients.items()))

    def __str__(self):
        if self.is_zero:
            return '0'
        parts = []
        for e, c in sorted(self._coefficients.items(), reverse=True):
            monomial = '' if e == 0 else 't' if e == 1 else f"t^{e}"
            magnitude = abs(c)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return ' '.join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"
